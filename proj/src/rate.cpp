#include "rate.hpp"

#include <cmath>
#include <string>

#include "constants.hpp"
#include "error.hpp"
#include "marcus.hpp"
#include "parallel.hpp"

namespace pmet {

std::string_view to_string(PathwayMode mode)
{
    switch (mode) {
    case PathwayMode::total: return "total";
    case PathwayMode::direct_only: return "direct";
    case PathwayMode::bridge_only: return "bridge";
    }
    return "total";
}

std::vector<double> thermal_populations(double beta, double hbar_omega_c, int n_max)
{
    if (!(beta > 0.0) || !(hbar_omega_c > 0.0))
        throw InvalidArgument("thermal populations need beta > 0 and hbar_omega_c > 0");
    if (n_max < 0)
        throw InvalidArgument("n_max must be non-negative");
    std::vector<double> p(static_cast<std::size_t>(n_max) + 1);
    double z = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        p[n] = std::exp(-beta * n * hbar_omega_c);
        z += p[n];
    }
    for (double& v : p)
        v /= z;
    return p;
}

double weighted_rate_sum(const ChannelTable& table)
{
    double k = 0.0;
    for (const ChannelRow& row : table.rows)
        k += row.p_n * row.partial_rate;
    return k;
}

double pathway_amplitude(const ChannelRow& row, PathwayMode mode)
{
    switch (mode) {
    case PathwayMode::direct_only: return row.f_direct;
    case PathwayMode::bridge_only: return row.f_bridge;
    case PathwayMode::total: break;
    }
    return row.f_total;
}

RateResult assemble_rate(const Cutoffs& cut, const std::vector<double>& p, double lambda, double kT,
                         const RateOptions& options, const ChannelFiller& fill)
{
    if (static_cast<int>(p.size()) != cut.n_max + 1)
        throw InvalidArgument("population vector does not match n_max");
    const std::size_t n_rows = static_cast<std::size_t>(cut.n_max) + 1;
    const std::size_t n_cols = static_cast<std::size_t>(cut.m_max) + 1;

    RateResult result;
    result.pathway = options.pathway;
    result.truncation_used = cut;
    result.table.rows.resize(n_rows * n_cols);

    parallel_for(n_rows, options.workers, [&](std::size_t n) {
        for (std::size_t m = 0; m < n_cols; ++m) {
            ChannelRow& row = result.table.rows[n * n_cols + m];
            row.n = static_cast<int>(n);
            row.m = static_cast<int>(m);
            row.p_n = p[n];
            try {
                fill(row.n, row.m, row);
            } catch (const SingularityError&) {
                if (!options.skip_poles)
                    throw;
                const double nan = std::nan("");
                row.f_direct = row.f_bridge = row.f_total = row.delta_g = nan;
                row.partial_rate = 0.0;
                row.pole_skipped = true;
                continue;
            }
            row.f_total = row.f_direct + row.f_bridge;
            const double f = pathway_amplitude(row, options.pathway);
            row.partial_rate = std::abs(f) < kNegligibleCouplingEv ? 0.0 : fgr_channel_rate(f, row.delta_g, lambda, kT);
        }
    });

    for (const ChannelRow& row : result.table.rows)
        result.poles_skipped += row.pole_skipped ? 1 : 0;
    result.total_rate = weighted_rate_sum(result.table);
    return result;
}

double pole_denominator(double value, const char* what, int n, int m, int l)
{
    if (std::abs(value) < kPoleGuardEv) {
        std::string msg = std::string("photon-shifted resonance in ") + what + " at (n=" + std::to_string(n) +
                          ", m=" + std::to_string(m);
        if (l >= 0)
            msg += ", l=" + std::to_string(l);
        msg += "): denominator " + std::to_string(value) + " eV";
        throw SingularityError(msg, n, m, l);
    }
    return value;
}

}  // namespace pmet
