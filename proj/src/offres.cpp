#include "offres.hpp"

#include <algorithm>
#include <cmath>

#include "constants.hpp"
#include "error.hpp"
#include "marcus.hpp"
#include "truncation.hpp"

namespace pmet {

namespace {

void require_offres(const SystemSpec& spec)
{
    if (spec.mode() != CavityMode::off_resonant)
        throw InvalidArgument("system is not in off_resonant mode");
}

void require_index(int v, const char* name)
{
    if (v < 0)
        throw InvalidArgument(std::string(name) + " must be non-negative");
}

std::size_t matrix_size(const OffResDisplacements& d, const Cutoffs& cut)
{
    const double widest = std::max({std::abs(d.da.d), std::abs(d.db.d), std::abs(d.ba.d)});
    const int trusted = std::max({cut.n_max, cut.m_max, cut.l_max}) + 1;
    return static_cast<std::size_t>(trusted) + 1 + overlap_headroom({widest});
}

}  // namespace

OffResDisplacements offres_displacements(const SystemSpec& spec)
{
    const DipoleSet& mu = spec.dipoles();
    const double chi = spec.cavity().chi;
    const double w = spec.cavity().hbar_omega_c;
    return {displacement_parameter(chi, mu.d_db, w), displacement_parameter(chi, mu.d_ba, w),
            displacement_parameter(chi, mu.d_da, w)};
}

double dressed_offres(const OverlapMatrix& s, double v, double hg, int row, int col)
{
    require_index(row, "row index");
    require_index(col, "column index");
    const auto r = static_cast<std::size_t>(row);
    const auto c = static_cast<std::size_t>(col);
    const double raising = std::sqrt(row + 1.0) * s.at(r + 1, c);
    const double lowering = row > 0 ? std::sqrt(static_cast<double>(row)) * s.at(r - 1, c) : 0.0;
    return v * s.at(r, c) + hg * (lowering + raising);
}

double dressed_db_offres(int n, int l, const SystemSpec& spec)
{
    require_offres(spec);
    require_index(n, "n");
    require_index(l, "l");
    return OffResonantModel(spec, {n, l, n}).vdb(n, l);
}

double dressed_ba_offres(int l, int m, const SystemSpec& spec)
{
    require_offres(spec);
    require_index(l, "l");
    require_index(m, "m");
    return OffResonantModel(spec, {m, l, m}).vba(l, m);
}

double direct_da_offres(int n, int m, const SystemSpec& spec)
{
    require_offres(spec);
    require_index(n, "n");
    require_index(m, "m");
    const OverlapMatrix s = overlap_matrix(offres_displacements(spec).da, static_cast<std::size_t>(std::max(n, m)) + 1);
    const CavityParams& cav = spec.cavity();
    return cav.hbar_g_c * cav.hbar_eta_c / cav.hbar_omega_c * s(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
}

double indirect_da_offres(int n, int m, const SystemSpec& spec, int l_max)
{
    require_offres(spec);
    require_index(n, "n");
    require_index(m, "m");
    require_index(l_max, "l_max");
    const int k = std::max(n, m);
    return OffResonantModel(spec, {k, l_max, k}).f_bridge(n, m);
}

double total_da_offres(int n, int m, const SystemSpec& spec, PathwayMode mode, int l_max)
{
    require_offres(spec);
    require_index(n, "n");
    require_index(m, "m");
    require_index(l_max, "l_max");
    const int k = std::max(n, m);
    const OffResonantModel model(spec, {k, l_max, k});
    switch (mode) {
    case PathwayMode::direct_only: return model.f_direct(n, m);
    case PathwayMode::bridge_only: return model.f_bridge(n, m);
    case PathwayMode::total: break;
    }
    return model.f_direct(n, m) + model.f_bridge(n, m);
}

double channel_driving_force_offres(int n, int m, const SystemSpec& spec, int l_max)
{
    require_offres(spec);
    require_index(n, "n");
    require_index(m, "m");
    require_index(l_max, "l_max");
    const int k = std::max(n, m);
    return OffResonantModel(spec, {k, l_max, k}).delta_g(n, m);
}

OffResonantModel::OffResonantModel(const SystemSpec& spec, const Cutoffs& cutoffs)
    : OffResonantModel(spec, cutoffs, offres_displacements(spec))
{
}

OffResonantModel::OffResonantModel(const SystemSpec& spec, const Cutoffs& cutoffs, const OffResDisplacements& d)
    : spec_(spec), cutoffs_(cutoffs), s_da_(overlap_matrix(d.da, matrix_size(d, cutoffs))),
      cols_(static_cast<std::size_t>(cutoffs.l_max) + 1)
{
    require_offres(spec);
    const std::size_t size = s_da_.size();
    const OverlapMatrix s_db = overlap_matrix(d.db, size);
    const OverlapMatrix s_ba = overlap_matrix(d.ba, size);
    const MolecularParams& mol = spec.molecular();
    const CavityParams& cav = spec.cavity();
    const int k = std::max(cutoffs.n_max, cutoffs.m_max);
    vdb_.resize(static_cast<std::size_t>(k + 1) * cols_);
    vba_.resize(static_cast<std::size_t>(k + 1) * cols_);
    for (int i = 0; i <= k; ++i)
        for (int l = 0; l <= cutoffs.l_max; ++l) {
            vdb_[static_cast<std::size_t>(i) * cols_ + l] = dressed_offres(s_db, mol.v_db, cav.hbar_g_c, i, l);
            vba_[static_cast<std::size_t>(i) * cols_ + l] = dressed_offres(s_ba, mol.v_ba, cav.hbar_eta_c, l, i);
        }
}

double OffResonantModel::f_direct(int n, int m) const
{
    const CavityParams& cav = spec_.cavity();
    return cav.hbar_g_c * cav.hbar_eta_c / cav.hbar_omega_c *
           s_da_(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
}

double OffResonantModel::f_bridge(int n, int m) const
{
    const MolecularParams& mol = spec_.molecular();
    const double w = spec_.cavity().hbar_omega_c;
    double sum = 0.0;
    for (int l = 0; l <= cutoffs_.l_max; ++l) {
        const double num = vdb(n, l) * vba(l, m);
        if (num == 0.0)
            continue;
        const double den_ba = pole_denominator(mol.gap_ba() + (l - m) * w, "indirect coupling (U_B - U_A + (l - m) hbar_omega_c)", n, m, l);
        const double den_db = pole_denominator(mol.gap_db() + (l - n) * w, "indirect coupling (U_B - U_D + (l - n) hbar_omega_c)", n, m, l);
        sum += -(num / 2.0) * (1.0 / den_ba + 1.0 / den_db);
    }
    return sum;
}

double OffResonantModel::delta_g(int n, int m) const
{
    const MolecularParams& mol = spec_.molecular();
    const double w = spec_.cavity().hbar_omega_c;
    double sum_ba = 0.0;
    double sum_db = 0.0;
    for (int l = 0; l <= cutoffs_.l_max; ++l) {
        if (const double num = vba(l, n) * vba(l, m); num != 0.0)
            sum_ba += num / pole_denominator(mol.gap_ba() + (l - m) * w, "driving force (U_B - U_A + (l - m) hbar_omega_c)", n, m, l);
        if (const double num = vdb(n, l) * vdb(m, l); num != 0.0)
            sum_db += num / pole_denominator(mol.gap_db() + (l - n) * w, "driving force (U_B - U_D + (l - n) hbar_omega_c)", n, m, l);
    }
    double dg = -mol.u_d_minus_u_a() + (m - n) * w;
    dg -= sum_ba;
    dg += sum_db;
    return dg;
}

void OffResonantModel::fill(int n, int m, ChannelRow& row) const
{
    row.f_direct = f_direct(n, m);
    row.f_bridge = f_bridge(n, m);
    row.delta_g = delta_g(n, m);
}

RateResult offres_rate_at(const SystemSpec& spec, const Cutoffs& cutoffs, const RateOptions& options)
{
    const OffResonantModel model(spec, cutoffs);
    const std::vector<double> p = thermal_populations(spec.thermal().beta, spec.cavity().hbar_omega_c, cutoffs.n_max);
    return assemble_rate(cutoffs, p, spec.molecular().lambda_da, spec.thermal().kT, options,
                         [&model](int n, int m, ChannelRow& row) { model.fill(n, m, row); });
}

RateResult pmet_rate_offres(const SystemSpec& spec, const RateOptions& options)
{
    require_offres(spec);
    return converge_rate(spec.truncation(), true,
                         [&](const Cutoffs& cut) { return offres_rate_at(spec, cut, options); });
}

PathwayDecomposition decompose_table(RateResult result, double lambda, double kT)
{
    if (result.pathway != PathwayMode::total)
        throw InvalidArgument("pathway decomposition needs a total-pathway table");
    PathwayDecomposition out;
    for (const ChannelRow& row : result.table.rows) {
        if (row.pole_skipped)
            continue;
        out.direct += row.p_n * fgr_channel_rate(row.f_direct, row.delta_g, lambda, kT);
        out.bridge += row.p_n * fgr_channel_rate(row.f_bridge, row.delta_g, lambda, kT);
        const double shifted = row.delta_g + lambda;
        out.cross += row.p_n * 2.0 * row.f_direct * row.f_bridge / kHbarEvS * std::sqrt(kPi / (lambda * kT)) *
                     std::exp(-shifted * shifted / (4.0 * lambda * kT));
    }
    out.total = result.total_rate;
    out.result = std::move(result);
    return out;
}

PathwayDecomposition decompose_offres(const SystemSpec& spec, const RateOptions& options)
{
    RateOptions total = options;
    total.pathway = PathwayMode::total;
    return decompose_table(pmet_rate_offres(spec, total), spec.molecular().lambda_da, spec.thermal().kT);
}

}  // namespace pmet
