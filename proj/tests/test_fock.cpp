#include <doctest.h>

#include <cmath>

#include "error.hpp"
#include "fock.hpp"

using namespace pmet;

TEST_CASE("displacement_parameter")
{
    CHECK(displacement_parameter(0.01, 10.0, 0.2).d == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(displacement_parameter(0.3, 0.0, 0.5).d == 0.0);
    CHECK(displacement_parameter(0.005, 1.0, 0.86).d == doctest::Approx(0.0058140).epsilon(1e-4));
    CHECK_THROWS_AS(displacement_parameter(0.01, 1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(displacement_parameter(0.01, 1.0, -0.2), InvalidArgument);
}

TEST_CASE("zero displacement is the identity")
{
    const OverlapMatrix s = overlap_matrix({0.0}, 4);
    for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t m = 0; m < 4; ++m)
            CHECK(s(n, m) == (n == m ? 1.0 : 0.0));
    const OverlapMatrix o = overlap_matrix_oracle({0.0}, 4, 8);
    for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t m = 0; m < 4; ++m)
            CHECK(o(n, m) == (n == m ? 1.0 : 0.0));
}

TEST_CASE("closed-form entries at d = 0.5")
{
    const OverlapMatrix s = overlap_matrix({0.5}, 6);
    CHECK(s(0, 0) == doctest::Approx(0.8824969025845957).epsilon(1e-14));
    CHECK(s(1, 0) == doctest::Approx(0.4412484512922977).epsilon(1e-14));
    CHECK(s(0, 1) == doctest::Approx(-0.4412484512922977).epsilon(1e-14));
    CHECK(s(1, 1) == doctest::Approx(0.6618726769384464).epsilon(1e-14));
    CHECK(std::abs(s(0, 0) - 0.882497) < 5e-7);
    CHECK(std::abs(s(1, 0) - 0.441248) < 5e-7);
    CHECK(std::abs(s(1, 1) - 0.661873) < 5e-7);
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(overlap_matrix({0.5}, 0), InvalidArgument);
    CHECK_THROWS_AS(overlap_matrix_oracle({0.5}, 6, 11), InvalidArgument);
    CHECK_THROWS_AS(overlap_matrix({0.5}, 3).at(3, 0), InvalidArgument);
}

TEST_CASE("oracle agrees with the closed form")
{
    const OverlapMatrix a = overlap_matrix({0.5}, 6);
    const OverlapMatrix o = overlap_matrix_oracle({0.5}, 6, 40);
    for (std::size_t i = 0; i < 36; ++i)
        CHECK(std::abs(a.entries()[i] - o.entries()[i]) < 1e-10);

    for (double d : {0.1, 0.5, 1.0, 2.0, -1.3}) {
        const OverlapMatrix x = overlap_matrix({d}, 30);
        const OverlapMatrix y = overlap_matrix_oracle({d}, 30, 120);
        double worst = 0.0;
        for (std::size_t i = 0; i < 900; ++i)
            worst = std::max(worst, std::abs(x.entries()[i] - y.entries()[i]));
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("unitarity of full rows")
{
    // Rows of the exponential are unit vectors over the whole working basis;
    // inside a narrow block they are not (row 5 at d = 2 keeps only half its norm
    // in the first 10 columns), so the block is taken 40 wide.
    const OverlapMatrix o = overlap_matrix_oracle({2.0}, 40, 80);
    for (std::size_t n = 0; n <= 5; ++n) {
        double norm = 0.0;
        for (std::size_t k = 0; k < 40; ++k)
            norm += o(n, k) * o(n, k);
        CHECK(std::abs(norm - 1.0) < 1e-8);
    }
    const OverlapMatrix a = overlap_matrix({2.0}, 60);
    for (std::size_t n = 0; n < 10; ++n)
        for (std::size_t m = 0; m < 10; ++m) {
            double dot = 0.0;
            for (std::size_t k = 0; k < 60; ++k)
                dot += a(n, k) * a(m, k);
            CHECK(std::abs(dot - (n == m ? 1.0 : 0.0)) < 1e-10);
        }
}

TEST_CASE("transpose parity is exact")
{
    for (double d : {0.1, -0.7, 1.9, 4.0}) {
        const OverlapMatrix s = overlap_matrix({d}, 25);
        for (std::size_t n = 0; n < 25; ++n)
            for (std::size_t m = 0; m < 25; ++m)
                CHECK(s(m, n) - (((n + m) % 2) ? -s(n, m) : s(n, m)) == 0.0);
    }
}

TEST_CASE("sign flip gives the transpose")
{
    for (double d : {0.3, 1.1, 2.5}) {
        const OverlapMatrix p = overlap_matrix({d}, 20);
        const OverlapMatrix q = overlap_matrix({-d}, 20);
        for (std::size_t n = 0; n < 20; ++n)
            for (std::size_t m = 0; m < 20; ++m)
                CHECK(q(n, m) == p(m, n));
    }
}

TEST_CASE("composition")
{
    for (double d1 : {-1.0, -0.35, 0.2, 1.0})
        for (double d2 : {-0.8, 0.45, 1.0}) {
            const double span = std::abs(d1) + std::abs(d2);
            const auto size = static_cast<std::size_t>(std::ceil(4.0 * span * span + 20.0));
            const OverlapMatrix a = overlap_matrix({d1}, size);
            const OverlapMatrix b = overlap_matrix({d2}, size);
            const OverlapMatrix c = overlap_matrix({d1 + d2}, size);
            double worst = 0.0;
            for (std::size_t i = 0; i < size / 4; ++i)
                for (std::size_t j = 0; j < size / 4; ++j) {
                    double sum = 0.0;
                    for (std::size_t k = 0; k < size; ++k)
                        sum += a(i, k) * b(k, j);
                    worst = std::max(worst, std::abs(sum - c(i, j)));
                }
            CHECK(worst < 1e-8);
        }
}

TEST_CASE("column normalization approaches one from below")
{
    for (double d : {0.5, 1.5}) {
        for (std::size_t m : {0u, 3u}) {
            double previous = 0.0;
            for (std::size_t size = m + 1; size <= 40; ++size) {
                const OverlapMatrix s = overlap_matrix({d}, size);
                double norm = 0.0;
                for (std::size_t n = 0; n < size; ++n)
                    norm += s(n, m) * s(n, m);
                CHECK(norm >= previous);
                CHECK(norm <= 1.0 + 1e-14);
                previous = norm;
            }
            CHECK(previous == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("large indices stay finite")
{
    const OverlapMatrix s = overlap_matrix({0.8}, 200);
    for (double v : s.entries())
        CHECK(std::isfinite(v));
    CHECK(std::abs(s(199, 0)) < 1e-100);
}

TEST_CASE("headroom rule and Laguerre")
{
    CHECK(overlap_headroom({0.0}) == 10);
    CHECK(overlap_headroom({2.0}) == 26);
    CHECK(overlap_headroom({-0.5}) == 11);
    CHECK(assoc_laguerre(0, 3, 0.7) == 1.0);
    CHECK(assoc_laguerre(1, 2, 0.5) == doctest::Approx(2.5));
    // L_2^(1)(x) = (x^2 - 6x + 6) / 2
    CHECK(assoc_laguerre(2, 1, 1.5) == doctest::Approx((1.5 * 1.5 - 9.0 + 6.0) / 2.0));
}
