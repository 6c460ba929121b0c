#pragma once

#include <cstddef>
#include <vector>

namespace pmet {

/// Dimensionless displacement d of the operator exp(d (a^dagger - a)).
struct DisplacementParam {
    double d = 0.0;

    bool operator==(const DisplacementParam&) const = default;
};

/// d = chi * delta_mu / hbar_omega_c.
///
/// The polaron dressing exp(-(i/hbar) sqrt(2/(hbar omega^3)) chi dmu P_c) with
/// P_c = i sqrt(hbar omega / 2)(a^dagger - a) reduces to exp(d (a^dagger - a)).
DisplacementParam displacement_parameter(double chi, double delta_mu, double hbar_omega_c);

/// Dense N x N block of Fock-basis matrix elements <n| exp(d (a^dagger - a)) |m>.
/// Entries are real for real d.
class OverlapMatrix {
public:
    OverlapMatrix(DisplacementParam d, std::size_t size, std::vector<double> entries);

    DisplacementParam displacement() const { return d_; }
    std::size_t size() const { return size_; }

    /// Unchecked element access.
    double operator()(std::size_t n, std::size_t m) const { return s_[n * size_ + m]; }

    /// Checked element access; throws InvalidArgument past the truncation.
    double at(std::size_t n, std::size_t m) const;

    const std::vector<double>& entries() const { return s_; }

private:
    DisplacementParam d_;
    std::size_t size_;
    std::vector<double> s_;  // row-major
};

/// Closed form: for n >= m,
///   s[n][m] = sqrt(m!/n!) d^(n-m) exp(-d^2/2) L_m^(n-m)(d^2),
/// and s[m][n] = (-1)^(n+m) s[n][m]. Factorial ratios use lgamma; the
/// associated Laguerre polynomial uses its three-term recurrence in m.
OverlapMatrix overlap_matrix(DisplacementParam d, std::size_t size);

/// Independent check of `overlap_matrix`: exponentiates d (a^dagger - a) in an
/// n_work-dimensional truncated basis by scaling and squaring with a Taylor
/// core, then returns the leading size x size block. Requires n_work >= 2 size.
OverlapMatrix overlap_matrix_oracle(DisplacementParam d, std::size_t size, std::size_t n_work);

/// Extra basis states needed beyond the largest trusted index: ceil(4 d^2 + 10).
std::size_t overlap_headroom(DisplacementParam d);

/// Associated Laguerre polynomial L_m^(k)(x) by upward recurrence in m.
double assoc_laguerre(unsigned m, unsigned k, double x);

}  // namespace pmet
