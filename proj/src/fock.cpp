#include "fock.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace pmet {

DisplacementParam displacement_parameter(double chi, double delta_mu, double hbar_omega_c)
{
    if (!(hbar_omega_c > 0.0))
        throw InvalidArgument("photon energy must be positive");
    return {chi * delta_mu / hbar_omega_c};
}

OverlapMatrix::OverlapMatrix(DisplacementParam d, std::size_t size, std::vector<double> entries)
    : d_(d), size_(size), s_(std::move(entries))
{
    if (s_.size() != size_ * size_)
        throw InvalidArgument("overlap matrix storage does not match its size");
}

double OverlapMatrix::at(std::size_t n, std::size_t m) const
{
    if (n >= size_ || m >= size_)
        throw InvalidArgument("overlap index (" + std::to_string(n) + ", " + std::to_string(m) +
                              ") outside truncation of size " + std::to_string(size_));
    return (*this)(n, m);
}

std::size_t overlap_headroom(DisplacementParam d)
{
    return static_cast<std::size_t>(std::ceil(4.0 * d.d * d.d + 10.0));
}

double assoc_laguerre(unsigned m, unsigned k, double x)
{
    double prev = 1.0;
    if (m == 0)
        return prev;
    double cur = 1.0 + k - x;
    for (unsigned j = 1; j < m; ++j) {
        const double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

OverlapMatrix overlap_matrix(DisplacementParam d, std::size_t size)
{
    if (size == 0)
        throw InvalidArgument("overlap matrix size must be >= 1");
    if (!std::isfinite(d.d))
        throw InvalidArgument("displacement must be finite");

    std::vector<double> s(size * size, 0.0);
    if (d.d == 0.0) {
        for (std::size_t i = 0; i < size; ++i)
            s[i * size + i] = 1.0;
        return OverlapMatrix(d, size, std::move(s));
    }

    const double x = d.d * d.d;
    const double log_abs_d = std::log(std::abs(d.d));
    const bool negative = d.d < 0.0;
    for (std::size_t n = 0; n < size; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            const unsigned k = static_cast<unsigned>(n - m);
            const double log_mag = 0.5 * (std::lgamma(m + 1.0) - std::lgamma(n + 1.0)) + k * log_abs_d - 0.5 * x;
            double v = std::exp(log_mag) * assoc_laguerre(static_cast<unsigned>(m), k, x);
            if (negative && (k % 2 == 1))
                v = -v;
            s[n * size + m] = v;
            s[m * size + n] = (k % 2 == 1) ? -v : v;
        }
    }
    return OverlapMatrix(d, size, std::move(s));
}

namespace {

// Square matrix product c = a * b, all n x n row-major.
void matmul(const std::vector<double>& a, const std::vector<double>& b, std::vector<double>& c, std::size_t n)
{
    std::fill(c.begin(), c.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a[i * n + k];
            if (aik == 0.0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i * n + j] += aik * b[k * n + j];
        }
}

}  // namespace

OverlapMatrix overlap_matrix_oracle(DisplacementParam d, std::size_t size, std::size_t n_work)
{
    if (size == 0)
        throw InvalidArgument("overlap matrix size must be >= 1");
    if (n_work < 2 * size)
        throw InvalidArgument("oracle basis of " + std::to_string(n_work) + " states is less than twice the requested " +
                              std::to_string(size));

    const std::size_t n = n_work;
    // Generator G = d (a^dagger - a): G[j+1][j] = d sqrt(j+1), G[j][j+1] = -d sqrt(j+1).
    // Its norm is bounded by 2|d| sqrt(n); scale so the Taylor core sees norm <= 1/2.
    const double norm_bound = 2.0 * std::abs(d.d) * std::sqrt(static_cast<double>(n));
    int squarings = 0;
    double scale = 1.0;
    while (norm_bound * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }

    std::vector<double> g(n * n, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double v = d.d * scale * std::sqrt(static_cast<double>(j + 1));
        g[(j + 1) * n + j] = v;
        g[j * n + (j + 1)] = -v;
    }

    // exp(G) ~ sum_{k<=18} G^k / k!; with ||G|| <= 1/2 the tail is below 1e-22.
    std::vector<double> result(n * n, 0.0);
    std::vector<double> term(n * n, 0.0);
    std::vector<double> scratch(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        result[i * n + i] = 1.0;
        term[i * n + i] = 1.0;
    }
    for (int k = 1; k <= 18; ++k) {
        matmul(term, g, scratch, n);
        const double inv_k = 1.0 / k;
        for (std::size_t i = 0; i < n * n; ++i) {
            term[i] = scratch[i] * inv_k;
            result[i] += term[i];
        }
    }
    for (int i = 0; i < squarings; ++i) {
        matmul(result, result, scratch, n);
        result.swap(scratch);
    }

    std::vector<double> block(size * size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            block[i * size + j] = result[i * n + j];
    return OverlapMatrix(d, size, std::move(block));
}

}  // namespace pmet
