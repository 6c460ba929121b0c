#pragma once

#include "fock.hpp"
#include "params.hpp"
#include "rate.hpp"

namespace pmet {

// On-resonance model: the photon is resonant with the D -> A transition and
// the bridge is not dressed. Three displacements enter:
//   S^DA: d = chi (mu_dd - mu_aa) / hbar_omega_c
//   S^DB: d = chi mu_dd / hbar_omega_c
//   S^BA: d = -chi mu_aa / hbar_omega_c

struct ResonantDisplacements {
    DisplacementParam da, db, ba;
};

ResonantDisplacements resonant_displacements(const SystemSpec& spec);

/// v_db * s_db[n][0].
double dressed_db_coupling(int n, double v_db, const OverlapMatrix& s_db);

/// v_ba * s_ba[0][m].
double dressed_ba_coupling(int m, double v_ba, const OverlapMatrix& s_ba);

/// hbar_g_c [sqrt(n) s_da[n-1][m] + sqrt(n+1) s_da[n+1][m]]. Needs row n+1.
double direct_da_coupling(int n, int m, double hbar_g_c, const OverlapMatrix& s_da);

/// -(vdb_n vba_m / 2) [1/(gap_ba - m hbar_omega_c) + 1/(gap_db - n hbar_omega_c)].
/// Throws SingularityError naming (n, m) when a nonzero term hits a pole.
double bridge_coupling(int n, int m, double vdb_n, double vba_m, double gap_ba, double gap_db, double hbar_omega_c);

/// Channel driving force
///   -(U_D - U_A) + (m - n) hbar_omega_c - vba_n vba_m / (gap_ba - m hbar_omega_c)
///                                       + vdb_n vdb_m / (gap_db - n hbar_omega_c).
double channel_driving_force(int n, int m, const SystemSpec& spec);

/// Overlap matrices and dressed couplings for one set of cutoffs. Immutable;
/// channel evaluation is safe from several threads.
class ResonantModel {
public:
    ResonantModel(const SystemSpec& spec, const Cutoffs& cutoffs);

    double f_direct(int n, int m) const;
    double f_bridge(int n, int m) const;
    double delta_g(int n, int m) const;
    void fill(int n, int m, ChannelRow& row) const;

    const OverlapMatrix& s_da() const { return s_da_; }
    const OverlapMatrix& s_db() const { return s_db_; }
    const OverlapMatrix& s_ba() const { return s_ba_; }

private:
    ResonantModel(const SystemSpec& spec, const Cutoffs& cutoffs, const ResonantDisplacements& d);

    const SystemSpec& spec_;
    Cutoffs cutoffs_;
    OverlapMatrix s_da_, s_db_, s_ba_;
};

/// Rate at fixed cutoffs (l_max ignored).
RateResult resonant_rate_at(const SystemSpec& spec, const Cutoffs& cutoffs, const RateOptions& options = {});

/// Rate under the system's truncation policy. Throws InvalidArgument for an
/// off-resonant spec.
RateResult pmet_rate_resonant(const SystemSpec& spec, const RateOptions& options = {});

}  // namespace pmet
