#include "resonant.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "truncation.hpp"

namespace pmet {

namespace {

std::size_t matrix_size(const ResonantDisplacements& d, const Cutoffs& cut)
{
    const double widest = std::max({std::abs(d.da.d), std::abs(d.db.d), std::abs(d.ba.d)});
    const int trusted = std::max(cut.n_max + 1, cut.m_max);
    return static_cast<std::size_t>(trusted) + 1 + overlap_headroom({widest});
}

void require_resonant(const SystemSpec& spec)
{
    if (spec.mode() != CavityMode::resonant)
        throw InvalidArgument("system is not in resonant mode");
}

}  // namespace

ResonantDisplacements resonant_displacements(const SystemSpec& spec)
{
    const DipoleSet& mu = spec.dipoles();
    const double chi = spec.cavity().chi;
    const double w = spec.cavity().hbar_omega_c;
    return {displacement_parameter(chi, mu.mu_dd - mu.mu_aa, w), displacement_parameter(chi, mu.mu_dd, w),
            displacement_parameter(chi, -mu.mu_aa, w)};
}

double dressed_db_coupling(int n, double v_db, const OverlapMatrix& s_db)
{
    if (n < 0)
        throw InvalidArgument("photon number must be non-negative");
    return v_db * s_db.at(static_cast<std::size_t>(n), 0);
}

double dressed_ba_coupling(int m, double v_ba, const OverlapMatrix& s_ba)
{
    if (m < 0)
        throw InvalidArgument("photon number must be non-negative");
    return v_ba * s_ba.at(0, static_cast<std::size_t>(m));
}

double direct_da_coupling(int n, int m, double hbar_g_c, const OverlapMatrix& s_da)
{
    if (n < 0 || m < 0)
        throw InvalidArgument("photon numbers must be non-negative");
    const auto un = static_cast<std::size_t>(n);
    const auto um = static_cast<std::size_t>(m);
    const double raising = std::sqrt(n + 1.0) * s_da.at(un + 1, um);
    const double lowering = n > 0 ? std::sqrt(static_cast<double>(n)) * s_da.at(un - 1, um) : 0.0;
    return hbar_g_c * (lowering + raising);
}

double bridge_coupling(int n, int m, double vdb_n, double vba_m, double gap_ba, double gap_db, double hbar_omega_c)
{
    const double num = vdb_n * vba_m;
    if (num == 0.0)
        return 0.0;
    const double den_ba = pole_denominator(gap_ba - m * hbar_omega_c, "bridge coupling (U_B - U_A - m hbar_omega_c)", n, m);
    const double den_db = pole_denominator(gap_db - n * hbar_omega_c, "bridge coupling (U_B - U_D - n hbar_omega_c)", n, m);
    return -(num / 2.0) * (1.0 / den_ba + 1.0 / den_db);
}

namespace {

double driving_force(int n, int m, const MolecularParams& mol, double w, double vba_n, double vba_m, double vdb_n,
                     double vdb_m)
{
    double dg = -mol.u_d_minus_u_a() + (m - n) * w;
    if (const double num = vba_n * vba_m; num != 0.0)
        dg -= num / pole_denominator(mol.gap_ba() - m * w, "driving force (U_B - U_A - m hbar_omega_c)", n, m);
    if (const double num = vdb_n * vdb_m; num != 0.0)
        dg += num / pole_denominator(mol.gap_db() - n * w, "driving force (U_B - U_D - n hbar_omega_c)", n, m);
    return dg;
}

}  // namespace

double channel_driving_force(int n, int m, const SystemSpec& spec)
{
    require_resonant(spec);
    if (n < 0 || m < 0)
        throw InvalidArgument("photon numbers must be non-negative");
    const ResonantDisplacements d = resonant_displacements(spec);
    const std::size_t size = static_cast<std::size_t>(std::max(n, m)) + 1;
    const OverlapMatrix s_db = overlap_matrix(d.db, size);
    const OverlapMatrix s_ba = overlap_matrix(d.ba, size);
    const MolecularParams& mol = spec.molecular();
    return driving_force(n, m, mol, spec.cavity().hbar_omega_c, dressed_ba_coupling(n, mol.v_ba, s_ba),
                         dressed_ba_coupling(m, mol.v_ba, s_ba), dressed_db_coupling(n, mol.v_db, s_db),
                         dressed_db_coupling(m, mol.v_db, s_db));
}

ResonantModel::ResonantModel(const SystemSpec& spec, const Cutoffs& cutoffs)
    : ResonantModel(spec, cutoffs, resonant_displacements(spec))
{
}

ResonantModel::ResonantModel(const SystemSpec& spec, const Cutoffs& cutoffs, const ResonantDisplacements& d)
    : spec_(spec),
      cutoffs_(cutoffs),
      s_da_(overlap_matrix(d.da, matrix_size(d, cutoffs))),
      s_db_(overlap_matrix(d.db, s_da_.size())),
      s_ba_(overlap_matrix(d.ba, s_da_.size()))
{
    require_resonant(spec);
}

double ResonantModel::f_direct(int n, int m) const
{
    return direct_da_coupling(n, m, spec_.cavity().hbar_g_c, s_da_);
}

double ResonantModel::f_bridge(int n, int m) const
{
    const MolecularParams& mol = spec_.molecular();
    return bridge_coupling(n, m, dressed_db_coupling(n, mol.v_db, s_db_), dressed_ba_coupling(m, mol.v_ba, s_ba_),
                           mol.gap_ba(), mol.gap_db(), spec_.cavity().hbar_omega_c);
}

double ResonantModel::delta_g(int n, int m) const
{
    const MolecularParams& mol = spec_.molecular();
    return driving_force(n, m, mol, spec_.cavity().hbar_omega_c, dressed_ba_coupling(n, mol.v_ba, s_ba_),
                         dressed_ba_coupling(m, mol.v_ba, s_ba_), dressed_db_coupling(n, mol.v_db, s_db_),
                         dressed_db_coupling(m, mol.v_db, s_db_));
}

void ResonantModel::fill(int n, int m, ChannelRow& row) const
{
    row.f_direct = f_direct(n, m);
    row.f_bridge = f_bridge(n, m);
    row.delta_g = delta_g(n, m);
}

RateResult resonant_rate_at(const SystemSpec& spec, const Cutoffs& cutoffs, const RateOptions& options)
{
    const Cutoffs cut{cutoffs.n_max, 0, cutoffs.m_max};
    const ResonantModel model(spec, cut);
    const std::vector<double> p = thermal_populations(spec.thermal().beta, spec.cavity().hbar_omega_c, cut.n_max);
    return assemble_rate(cut, p, spec.molecular().lambda_da, spec.thermal().kT, options,
                         [&model](int n, int m, ChannelRow& row) { model.fill(n, m, row); });
}

RateResult pmet_rate_resonant(const SystemSpec& spec, const RateOptions& options)
{
    require_resonant(spec);
    return converge_rate(spec.truncation(), false,
                         [&](const Cutoffs& cut) { return resonant_rate_at(spec, cut, options); });
}

}  // namespace pmet
