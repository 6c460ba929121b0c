#pragma once

#include <functional>
#include <string_view>
#include <vector>

namespace pmet {

/// Which D-A amplitude enters |F|^2: the sum, only the cavity-created direct
/// term, or only the bridge-mediated term.
enum class PathwayMode { total, direct_only, bridge_only };

std::string_view to_string(PathwayMode mode);

struct Cutoffs {
    int n_max = 0;
    int l_max = 0;  // 0 when the model has no bridge photon index
    int m_max = 0;

    bool operator==(const Cutoffs&) const = default;
};

/// One photon-dressed channel |D,n> -> |A,m>.
struct ChannelRow {
    int n = 0;
    int m = 0;
    double p_n = 0.0;
    double f_direct = 0.0;      // eV
    double f_bridge = 0.0;      // eV
    double f_total = 0.0;       // eV, f_direct + f_bridge
    double delta_g = 0.0;       // eV
    double partial_rate = 0.0;  // 1/s, golden-rule rate for the selected amplitude, not weighted by p_n
    bool pole_skipped = false;
};

/// Rows in (n, m) order, n outer.
struct ChannelTable {
    std::vector<ChannelRow> rows;
};

struct TruncationStep {
    Cutoffs cutoffs;
    double rate = 0.0;
};

struct RateResult {
    double total_rate = 0.0;  // 1/s, sum over rows of p_n * partial_rate
    PathwayMode pathway = PathwayMode::total;
    ChannelTable table;
    Cutoffs truncation_used;
    /// Adaptive mode only: true once successive cutoffs changed the rate by less
    /// than the tolerance. Always false under a fixed policy.
    bool converged = false;
    double relative_change = 0.0;  // last staircase step; NaN under a fixed policy
    int poles_skipped = 0;
    std::vector<TruncationStep> history;
};

struct RateOptions {
    PathwayMode pathway = PathwayMode::total;
    /// Drop channels whose energy denominators hit a pole instead of failing.
    bool skip_poles = false;
    unsigned workers = 1;
};

/// Boltzmann weights exp(-beta n hbar_omega) for n = 0..n_max, renormalized to sum to 1.
std::vector<double> thermal_populations(double beta, double hbar_omega_c, int n_max);

/// Sum of p_n * partial_rate over rows, in row order.
double weighted_rate_sum(const ChannelTable& table);

/// Selected amplitude of a row under `mode`.
double pathway_amplitude(const ChannelRow& row, PathwayMode mode);

/// Fills f_direct, f_bridge and delta_g of one channel; may throw SingularityError.
using ChannelFiller = std::function<void(int n, int m, ChannelRow& row)>;

/// Builds the (n, m) channel table at fixed cutoffs, evaluating rows in parallel
/// over n, and sums p_n * partial_rate in row order. Pole errors abort unless
/// options.skip_poles, in which case the row is flagged and contributes nothing.
RateResult assemble_rate(const Cutoffs& cutoffs, const std::vector<double>& populations, double lambda, double kT,
                         const RateOptions& options, const ChannelFiller& fill);

/// Returns `value`, or throws SingularityError naming the channel when it lies within the pole guard.
double pole_denominator(double value, const char* what, int n, int m, int l = -1);

}  // namespace pmet
