#include <doctest.h>

#include <cmath>
#include <random>

#include "error.hpp"
#include "fock.hpp"
#include "marcus.hpp"
#include "offres.hpp"
#include "support.hpp"

using namespace pmet;

namespace {

SystemSpec with_g(double hbar_g, double w = 0.2)
{
    return test::offres([&](SystemInputs& in) {
        in.hbar_omega_c = w;
        in.chi.reset();
        in.hbar_g_c = hbar_g;
    });
}

}  // namespace

TEST_CASE("dressed couplings at zero field")
{
    const SystemSpec s = test::offres();
    for (int n = 0; n < 4; ++n)
        for (int l = 0; l < 4; ++l) {
            CHECK(dressed_db_offres(n, l, s) == (n == l ? 0.005 : 0.0));
            CHECK(dressed_ba_offres(n, l, s) == (n == l ? 0.005 : 0.0));
        }
}

TEST_CASE("dressed donor-bridge coupling structure")
{
    // V_DB = 0 leaves the photon-exchange term alone.
    const SystemSpec s = test::offres([](SystemInputs& in) { in.v_db = 0.0; in.chi = 0.004; });
    const OverlapMatrix m = overlap_matrix(offres_displacements(s).db, 10);
    for (int l = 0; l < 4; ++l)
        CHECK(dressed_db_offres(0, l, s) == doctest::Approx(0.004 * m(1, static_cast<std::size_t>(l))).epsilon(1e-14));

    // d = chi d_db / w = 0.002 * 50 / 0.2 = 0.5.
    const SystemSpec h = test::offres([](SystemInputs& in) { in.chi = 0.002; in.d_db = 50.0; });
    CHECK(offres_displacements(h).db.d == doctest::Approx(0.5).epsilon(1e-15));
    const double v = dressed_db_offres(0, 0, h);
    CHECK(v == doctest::Approx(5.294981415507573e-3).epsilon(1e-13));
    CHECK(std::abs(v - 5.2950e-3) < 5e-8);
}

TEST_CASE("bridge-acceptor coupling lowering term")
{
    const SystemSpec s = test::offres([](SystemInputs& in) { in.chi = 0.003; in.mu_ba = 2.0; });
    const OverlapMatrix m = overlap_matrix(offres_displacements(s).ba, 12);
    const double eta = s.cavity().hbar_eta_c;
    for (int mm = 0; mm < 3; ++mm) {
        const auto um = static_cast<std::size_t>(mm);
        CHECK(dressed_ba_offres(0, mm, s) == doctest::Approx(0.005 * m(0, um) + eta * m(1, um)).epsilon(1e-14));
        CHECK(dressed_ba_offres(3, mm, s) ==
              doctest::Approx(0.005 * m(3, um) + eta * (std::sqrt(3.0) * m(2, um) + 2.0 * m(4, um))).epsilon(1e-14));
    }
}

TEST_CASE("mirror symmetry of the two dressed couplings")
{
    const SystemSpec s = test::offres([](SystemInputs& in) { in.chi = 0.004; in.d_db = 3.0; in.d_ba = 3.0; });
    CHECK(s.cavity().hbar_g_c == s.cavity().hbar_eta_c);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            CHECK(dressed_ba_offres(a, b, s) == dressed_db_offres(a, b, s));
}

TEST_CASE("direct coupling")
{
    CHECK(direct_da_offres(0, 0, test::offres()) == 0.0);
    const SystemSpec s = test::offres([](SystemInputs& in) { in.chi = 0.002; in.d_da = 0.0; });
    CHECK(direct_da_offres(0, 0, s) == doctest::Approx(2e-5).epsilon(1e-14));
    CHECK(direct_da_offres(2, 2, s) == doctest::Approx(2e-5).epsilon(1e-14));
    CHECK(direct_da_offres(1, 2, s) == 0.0);
    const SystemSpec t = test::offres([](SystemInputs& in) { in.chi = 0.002; });
    const OverlapMatrix m = overlap_matrix(offres_displacements(t).da, 4);
    CHECK(direct_da_offres(1, 3, t) == doctest::Approx(2e-5 * m(1, 3)).epsilon(1e-14));
}

TEST_CASE("indirect coupling")
{
    const SystemSpec s0 = test::offres();
    const double vx = superexchange_coupling(0.005, 0.005, 1.65, 1.5);
    for (int n = 0; n < 3; ++n)
        for (int m = 0; m < 3; ++m)
            CHECK(indirect_da_offres(n, m, s0, 8) == (n == m ? vx : 0.0));

    const SystemSpec z = test::offres([](SystemInputs& in) { in.chi = 0.003; in.v_db = 0.0; });
    CHECK(indirect_da_offres(1, 0, z, 8) != 0.0);  // photon exchange survives V_DB = 0
    const SystemSpec zz = test::offres([](SystemInputs& in) { in.v_db = 0.0; });
    CHECK(indirect_da_offres(0, 0, zz, 8) == 0.0);

    // Anchor computed from expm overlaps and a reverse-order l sum.
    const SystemSpec a = with_g(0.001, 0.04);
    double prev = indirect_da_offres(0, 0, a, 4);
    for (int l_max = 8; l_max <= 64; l_max *= 2) {
        const double cur = indirect_da_offres(0, 0, a, l_max);
        if (l_max >= 16)
            CHECK(std::abs(cur - prev) < 1e-10 * std::abs(cur));
        prev = cur;
    }
    CHECK(prev == doctest::Approx(-1.679903399283302e-05).epsilon(1e-12));
}

TEST_CASE("total coupling and pathway selection")
{
    const SystemSpec s = with_g(0.003);
    for (int n = 0; n < 3; ++n)
        for (int m = 0; m < 3; ++m) {
            const double d = total_da_offres(n, m, s, PathwayMode::direct_only, 16);
            const double b = total_da_offres(n, m, s, PathwayMode::bridge_only, 16);
            CHECK(total_da_offres(n, m, s, PathwayMode::total, 16) == d + b);
        }
    CHECK(total_da_offres(1, 1, test::offres(), PathwayMode::direct_only, 8) == 0.0);
    CHECK(total_da_offres(2, 2, test::offres(), PathwayMode::total, 8) == superexchange_coupling(0.005, 0.005, 1.65, 1.5));
}

TEST_CASE("channel driving force")
{
    const SystemSpec s0 = test::offres();
    const double dg = marcus(s0).delta_g;
    for (int n = 0; n < 4; ++n)
        CHECK(channel_driving_force_offres(n, n, s0, 8) == dg);
    CHECK(channel_driving_force_offres(0, 2, s0, 8) == doctest::Approx(-0.15 + 0.4).epsilon(1e-15));
    CHECK(channel_driving_force_offres(3, 1, s0, 8) == doctest::Approx(-0.15 - 0.4).epsilon(1e-15));

    // n = m removes the photon shift at any field.
    const SystemSpec s = with_g(0.004);
    const OffResonantModel model(s, {3, 16, 3});
    for (int n = 0; n < 3; ++n) {
        double ba = 0.0, db = 0.0;
        for (int l = 0; l <= 16; ++l) {
            ba += model.vba(l, n) * model.vba(l, n) / (1.65 + (l - n) * 0.2);
            db += model.vdb(n, l) * model.vdb(n, l) / (1.5 + (l - n) * 0.2);
        }
        CHECK(channel_driving_force_offres(n, n, s, 16) == doctest::Approx(-0.15 - ba + db).epsilon(1e-13));
    }
}

TEST_CASE("cavity-free reduction for every pathway")
{
    const SystemSpec s = test::offres();
    const double k = marcus(s).rate;
    RateOptions opt;
    CHECK(test::rel(pmet_rate_offres(s, opt).total_rate, k) < 1e-10);
    opt.pathway = PathwayMode::direct_only;
    CHECK(pmet_rate_offres(s, opt).total_rate == 0.0);
    opt.pathway = PathwayMode::bridge_only;
    CHECK(test::rel(pmet_rate_offres(s, opt).total_rate, k) < 1e-10);

    const SystemSpec warm = test::offres([](SystemInputs& in) { in.hbar_omega_c = 0.02; });
    CHECK(test::rel(pmet_rate_offres(warm).total_rate, marcus(warm).rate) < 1e-10);
}

TEST_CASE("pathway decomposition bookkeeping")
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> g(0.002, 0.02);
    for (int i = 0; i < 4; ++i) {
        const PathwayDecomposition d = decompose_offres(with_g(g(rng)));
        CHECK(std::abs((d.total - d.direct - d.bridge) - d.cross) < 1e-12 * std::abs(d.cross));
    }
    RateOptions opt;
    opt.pathway = PathwayMode::direct_only;
    CHECK(test::rel(pmet_rate_offres(with_g(0.01), opt).total_rate, decompose_offres(with_g(0.01)).direct) < 1e-8);
}

TEST_CASE("|F_nm| = |F_mn| for fully symmetric parameters")
{
    auto sym = [](double chi, double d) {
        return test::offres([&](SystemInputs& in) {
            in.u_a = 0.0;
            in.chi = chi;
            in.d_db = in.d_ba = d;
            in.d_da = 0.0;
        });
    };
    // Holds with the dressing switched off (chi = 0) and with undisplaced
    // overlaps (d = 0); with both g and d nonzero it does not.
    for (const SystemSpec& s : {sym(0.0, 5.0), sym(0.004, 0.0)}) {
        const OffResonantModel model(s, {6, 40, 6});
        for (int n = 0; n < 5; ++n)
            for (int m = 0; m < 5; ++m) {
                const double a = model.f_direct(n, m) + model.f_bridge(n, m);
                const double b = model.f_direct(m, n) + model.f_bridge(m, n);
                CHECK(std::abs(std::abs(a) - std::abs(b)) <= 1e-14 * std::max(std::abs(a), 1e-300));
            }
    }
}

TEST_CASE("suppression then enhancement at 200 meV")
{
    const double k0 = pmet_rate_offres(test::offres()).total_rate;
    CHECK(pmet_rate_offres(with_g(0.001)).total_rate < k0);
    CHECK(pmet_rate_offres(with_g(0.02)).total_rate > k0);
}

TEST_CASE("poles abort unless skipped")
{
    // gap_db = 1.5 eV = 5 * 0.3 eV: l - n = -5 hits the donor denominator.
    const SystemSpec s = test::offres([](SystemInputs& in) {
        in.hbar_omega_c = 0.3;
        in.chi = 0.002;
        in.truncation.mode = TruncationMode::fixed;
        in.truncation.n_max = 6;
        in.truncation.m_max = 6;
        in.truncation.l_max = 6;
    });
    try {
        pmet_rate_offres(s);
        FAIL("expected SingularityError");
    } catch (const SingularityError& e) {
        CHECK(e.l() >= 0);
        CHECK(e.n() - e.l() == 5);
    }
    RateOptions opt;
    opt.skip_poles = true;
    const RateResult r = pmet_rate_offres(s, opt);
    CHECK(r.poles_skipped > 0);
    CHECK(std::isfinite(r.total_rate));
}

TEST_CASE("mode mismatch")
{
    CHECK_THROWS_AS(pmet_rate_offres(test::resonant()), InvalidArgument);
    CHECK_THROWS_AS(dressed_db_offres(0, 0, test::resonant()), InvalidArgument);
}
