#include "truncation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "error.hpp"

namespace pmet {

double relative_change(double a, double b)
{
    if (a == b)
        return 0.0;
    if (b == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::abs(b - a) / std::abs(b);
}

RateResult converge_rate(const TruncationPolicy& policy, bool uses_bridge_cutoff,
                         const std::function<RateResult(const Cutoffs&)>& evaluate)
{
    Cutoffs cut{policy.n_max, uses_bridge_cutoff ? policy.l_max : 0, policy.m_max};

    if (policy.mode == TruncationMode::fixed) {
        RateResult r = evaluate(cut);
        r.truncation_used = cut;
        r.converged = false;
        r.relative_change = std::numeric_limits<double>::quiet_NaN();
        r.history = {{cut, r.total_rate}};
        return r;
    }

    std::vector<TruncationStep> history;
    RateResult prev = evaluate(cut);
    history.push_back({cut, prev.total_rate});
    double delta = std::numeric_limits<double>::infinity();
    for (;;) {
        const Cutoffs next{2 * cut.n_max, 2 * cut.l_max, 2 * cut.m_max};
        if (next.n_max > kTruncationCap || next.l_max > kTruncationCap || next.m_max > kTruncationCap)
            throw NonConvergenceError("truncation did not converge to relative tolerance " + std::to_string(policy.tol) +
                                          " before reaching the cutoff cap " + std::to_string(kTruncationCap) +
                                          " (last relative change " + std::to_string(delta) + ")",
                                      kTruncationCap, delta);
        RateResult cur = evaluate(next);
        history.push_back({next, cur.total_rate});
        delta = relative_change(prev.total_rate, cur.total_rate);
        cut = next;
        if (delta < policy.tol) {
            cur.truncation_used = cut;
            cur.converged = true;
            cur.relative_change = delta;
            cur.history = std::move(history);
            return cur;
        }
        prev = std::move(cur);
    }
}

}  // namespace pmet
