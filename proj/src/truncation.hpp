#pragma once

#include <functional>

#include "params.hpp"
#include "rate.hpp"

namespace pmet {

/// Largest cutoff the adaptive staircase may reach.
inline constexpr int kTruncationCap = 256;

/// Evaluates a rate at the policy cutoffs. Under an adaptive policy, doubles
/// the cutoffs until two successive totals differ by less than policy.tol
/// (relative) and returns the result at the larger cutoffs. Throws
/// NonConvergenceError when the next step would exceed kTruncationCap.
///
/// `uses_bridge_cutoff` = false keeps l_max at 0 throughout.
RateResult converge_rate(const TruncationPolicy& policy, bool uses_bridge_cutoff,
                         const std::function<RateResult(const Cutoffs&)>& evaluate);

/// |b - a| / |b|, with 0 when both vanish.
double relative_change(double a, double b);

}  // namespace pmet
