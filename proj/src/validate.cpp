#include "validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fock.hpp"
#include "marcus.hpp"
#include "offres.hpp"
#include "resonant.hpp"

namespace pmet {

SystemInputs reference_resonant_inputs()
{
    SystemInputs in;
    in.mode = CavityMode::resonant;
    in.u_d = 0.0;
    in.u_a = 0.0;
    in.u_b = 1.5;
    in.v_db = 0.02;
    in.v_ba = 0.02;
    in.lambda_da = 0.65;
    in.hbar_omega_c = 0.86;
    in.chi = 0.0;
    in.mu_da = 1.0;
    in.mu_dd = 5.0;
    in.mu_aa = -5.0;
    in.temperature = 300.0;
    return in;
}

SystemInputs reference_offres_inputs()
{
    SystemInputs in;
    in.mode = CavityMode::off_resonant;
    in.u_d = 0.0;
    in.u_a = -0.15;
    in.u_b = 1.5;
    in.v_db = 0.005;
    in.v_ba = 0.005;
    in.lambda_da = 0.65;
    in.hbar_omega_c = 0.2;
    in.chi = 0.0;
    in.mu_db = 1.0;
    in.mu_ba = 1.0;
    in.d_db = 5.0;
    in.d_ba = 5.0;
    in.d_da = 1.0;
    in.temperature = 300.0;
    return in;
}

bool ValidationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

double relerr(double a, double b)
{
    return std::abs(a / b - 1.0);
}

}  // namespace

ValidationReport run_validation()
{
    ValidationReport report;
    auto add = [&](std::string name, bool ok, std::string detail) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    for (double d : {0.1, 0.5, 1.0, 2.0}) {
        const OverlapMatrix a = overlap_matrix({d}, 30);
        const OverlapMatrix o = overlap_matrix_oracle({d}, 30, 120);
        double worst = 0.0;
        for (std::size_t i = 0; i < a.entries().size(); ++i)
            worst = std::max(worst, std::abs(a.entries()[i] - o.entries()[i]));
        add(fmt("overlap oracle d=%.1f", d), worst < 1e-9, fmt("max abs difference %.3e", worst));

        bool parity = true;
        for (std::size_t n = 0; n < 30; ++n)
            for (std::size_t m = 0; m < 30; ++m)
                parity = parity && a(m, n) == (((n + m) % 2) ? -a(n, m) : a(n, m));
        add(fmt("transpose parity d=%.1f", d), parity, parity ? "exact" : "violated");
    }

    {
        const double d1 = 0.6;
        const double d2 = -0.9;
        const std::size_t size = static_cast<std::size_t>(std::ceil(4.0 * (std::abs(d1) + std::abs(d2)) * (std::abs(d1) + std::abs(d2)) + 20.0));
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
        add("overlap composition", worst < 1e-8, fmt("max abs difference %.3e", worst));
    }

    {
        const SystemSpec spec = build_system(reference_resonant_inputs());
        const RateResult r = pmet_rate_resonant(spec);
        const double p0 = thermal_populations(spec.thermal().beta, spec.cavity().hbar_omega_c, r.truncation_used.n_max)[0];
        const double k_mt = marcus(spec).rate;
        const double err = relerr(r.total_rate, p0 * k_mt);
        add("resonant cavity-free reduction", err < 1e-10, fmt("relative error %.3e", err));
    }

    {
        const SystemSpec spec = build_system(reference_offres_inputs());
        const double k_mt = marcus(spec).rate;
        for (PathwayMode mode : {PathwayMode::total, PathwayMode::direct_only, PathwayMode::bridge_only}) {
            RateOptions opt;
            opt.pathway = mode;
            const double k = pmet_rate_offres(spec, opt).total_rate;
            const bool ok = mode == PathwayMode::direct_only ? k == 0.0 : relerr(k, k_mt) < 1e-10;
            add("off-resonant cavity-free reduction (" + std::string(to_string(mode)) + ")", ok,
                fmt("rate %.6e vs Marcus %.6e", k, k_mt));
        }
    }

    {
        const double k = marcus_rate(-2.6667e-4, 0.0, 0.65, boltzmann_kT(300.0));
        add("Marcus hand value", relerr(k, 2.75e6) < 5e-3, fmt("rate %.6e", k));
    }
    return report;
}

}  // namespace pmet
