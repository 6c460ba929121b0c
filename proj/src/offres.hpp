#pragma once

#include <vector>

#include "fock.hpp"
#include "params.hpp"
#include "rate.hpp"

namespace pmet {

// Off-resonance model: donor, bridge and acceptor are all photon dressed.
//   S^DB: d = chi d_db / hbar_omega_c, d_db = mu_DD - mu_BB
//   S^BA: d = chi d_ba / hbar_omega_c, d_ba = mu_BB - mu_AA
//   S^DA: d = chi d_da / hbar_omega_c, d_da = mu_DD - mu_AA
// Bridge photon numbers l run over 0..l_max.

struct OffResDisplacements {
    DisplacementParam db, ba, da;
};

OffResDisplacements offres_displacements(const SystemSpec& spec);

/// v s[row][col] + hg [sqrt(row) s[row-1][col] + sqrt(row+1) s[row+1][col]], checked.
double dressed_offres(const OverlapMatrix& s, double v, double hg, int row, int col);

/// V_DB S^DB[n][l] + hbar_g_c [sqrt(n) S^DB[n-1][l] + sqrt(n+1) S^DB[n+1][l]].
double dressed_db_offres(int n, int l, const SystemSpec& spec);

/// V_BA S^BA[l][m] + hbar_eta_c [sqrt(l) S^BA[l-1][m] + sqrt(l+1) S^BA[l+1][m]].
double dressed_ba_offres(int l, int m, const SystemSpec& spec);

/// (hbar_g_c hbar_eta_c / hbar_omega_c) S^DA[n][m].
double direct_da_offres(int n, int m, const SystemSpec& spec);

/// -sum_{l <= l_max} (Vdb[n][l] Vba[l][m] / 2)
///      [1/(gap_ba + (l - m) hbar_omega_c) + 1/(gap_db + (l - n) hbar_omega_c)].
double indirect_da_offres(int n, int m, const SystemSpec& spec, int l_max);

/// Direct plus indirect, or the single pathway selected by `mode`.
double total_da_offres(int n, int m, const SystemSpec& spec, PathwayMode mode, int l_max);

/// -(U_D - U_A) + (m - n) hbar_omega_c
///   - sum_l Vba[l][n] Vba[l][m] / (gap_ba + (l - m) hbar_omega_c)
///   + sum_l Vdb[n][l] Vdb[m][l] / (gap_db + (l - n) hbar_omega_c).
double channel_driving_force_offres(int n, int m, const SystemSpec& spec, int l_max);

/// Overlap matrices and dressed-coupling tables for one set of cutoffs.
/// Immutable; channel evaluation is safe from several threads.
class OffResonantModel {
public:
    OffResonantModel(const SystemSpec& spec, const Cutoffs& cutoffs);

    /// Dressed couplings; n, m in [0, max(n_max, m_max)], l in [0, l_max].
    double vdb(int n, int l) const { return vdb_[static_cast<std::size_t>(n) * cols_ + l]; }
    double vba(int l, int m) const { return vba_[static_cast<std::size_t>(m) * cols_ + l]; }

    double f_direct(int n, int m) const;
    double f_bridge(int n, int m) const;
    double delta_g(int n, int m) const;
    void fill(int n, int m, ChannelRow& row) const;

private:
    OffResonantModel(const SystemSpec& spec, const Cutoffs& cutoffs, const OffResDisplacements& d);

    const SystemSpec& spec_;
    Cutoffs cutoffs_;
    OverlapMatrix s_da_;
    std::size_t cols_;          // l_max + 1
    std::vector<double> vdb_;   // [n][l]
    std::vector<double> vba_;   // stored [m][l]
};

/// Rate at fixed cutoffs.
RateResult offres_rate_at(const SystemSpec& spec, const Cutoffs& cutoffs, const RateOptions& options = {});

/// Rate under the system's truncation policy; n_max, l_max and m_max are
/// enlarged jointly. Throws InvalidArgument for a resonant spec.
RateResult pmet_rate_offres(const SystemSpec& spec, const RateOptions& options = {});

/// Total, direct-only and bridge-only rates from a single channel table,
/// together with the interference sum
///   sum 2 p_n f_direct f_bridge / hbar sqrt(pi / (lambda kT)) exp(-(dG + lambda)^2 / (4 lambda kT)).
struct PathwayDecomposition {
    double total = 0.0;
    double direct = 0.0;
    double bridge = 0.0;
    double cross = 0.0;
    RateResult result;  // the total-pathway evaluation the others were read from
};

/// Converges the total pathway, then splits its table.
PathwayDecomposition decompose_offres(const SystemSpec& spec, const RateOptions& options = {});

/// Splits an existing total-pathway table.
PathwayDecomposition decompose_table(RateResult result, double lambda, double kT);

}  // namespace pmet
