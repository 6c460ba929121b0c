#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "pmet/pmet.h"

namespace {

const char* kOffres = R"({"mode": "off_resonant", "u_b_minus_u_d": "1.5 eV", "u_d_minus_u_a": "150 meV",
    "v_db": "5 meV", "v_ba": "5 meV", "lambda_da": 0.65, "hbar_omega_c": "200 meV", "hbar_g_c": "2 meV",
    "mu_db": 1, "mu_ba": 1, "temperature": 300})";

}  // namespace

TEST_CASE("system lifecycle and JSON")
{
    pmet_system* sys = nullptr;
    REQUIRE(pmet_system_from_json(kOffres, &sys) == PMET_OK);
    CHECK(pmet_system_mode(sys) == PMET_MODE_OFF_RESONANT);
    char* json = nullptr;
    REQUIRE(pmet_system_to_json(sys, &json) == PMET_OK);
    pmet_system* again = nullptr;
    CHECK(pmet_system_from_json(json, &again) == PMET_OK);
    pmet_string_free(json);

    pmet_rate_result* a = nullptr;
    pmet_rate_result* b = nullptr;
    REQUIRE(pmet_rate_compute(sys, nullptr, &a) == PMET_OK);
    REQUIRE(pmet_rate_compute(again, nullptr, &b) == PMET_OK);
    CHECK(pmet_rate_total(a) == pmet_rate_total(b));
    pmet_rate_free(a);
    pmet_rate_free(b);
    pmet_system_free(again);
    pmet_system_free(sys);
}

TEST_CASE("error codes and messages")
{
    pmet_system* sys = nullptr;
    CHECK(pmet_system_from_json("{", &sys) == PMET_ERR_CONFIG);
    CHECK(sys == nullptr);
    CHECK(std::strlen(pmet_last_error()) > 0);

    CHECK(pmet_system_from_json(R"({"mode": "resonant", "u_b_minus_u_d": 1.5, "u_d_minus_u_a": 0, "v_db": 0.02,
        "v_ba": 0.02, "lambda_da": 0, "hbar_omega_c": 0.86, "chi": 0, "mu_da": 1, "mu_dd": 5, "mu_aa": -5,
        "temperature": 300})", &sys) == PMET_ERR_CONFIG);
    CHECK(std::string(pmet_last_error()).find("lambda_da") != std::string::npos);

    CHECK(pmet_system_from_file("/nonexistent.json", &sys) == PMET_ERR_IO);
    CHECK(pmet_system_from_json(nullptr, &sys) == PMET_ERR_INVALID_ARGUMENT);

    double buf[4];
    CHECK(pmet_overlap_matrix(0.5, 0, buf) == PMET_ERR_INVALID_ARGUMENT);
    CHECK(pmet_overlap_oracle(0.5, 2, 3, buf) == PMET_ERR_INVALID_ARGUMENT);

    REQUIRE(pmet_system_from_json(R"({"mode": "resonant", "u_b_minus_u_d": 1.5, "u_d_minus_u_a": 0,
        "v_db": 0.02, "v_ba": 0.02, "lambda_da": 0.65, "hbar_omega_c": 0.5, "chi": 0.003, "mu_da": 1,
        "mu_dd": 5, "mu_aa": -5, "temperature": 300})", &sys) == PMET_OK);
    pmet_rate_result* r = nullptr;
    CHECK(pmet_rate_compute(sys, nullptr, &r) == PMET_ERR_SINGULARITY);
    pmet_rate_options opts = pmet_rate_options_default();
    opts.skip_poles = 1;
    REQUIRE(pmet_rate_compute(sys, &opts, &r) == PMET_OK);
    CHECK(pmet_rate_poles_skipped(r) > 0);
    pmet_rate_free(r);
    pmet_decomposition d;
    CHECK(pmet_rate_decompose(sys, nullptr, &d) == PMET_ERR_INVALID_ARGUMENT);
    pmet_system_free(sys);
}

TEST_CASE("rate accessors")
{
    pmet_system* sys = nullptr;
    REQUIRE(pmet_system_from_json(kOffres, &sys) == PMET_OK);
    pmet_rate_result* r = nullptr;
    REQUIRE(pmet_rate_compute(sys, nullptr, &r) == PMET_OK);
    int n = 0, l = 0, m = 0;
    pmet_rate_truncation(r, &n, &l, &m);
    CHECK(n >= 8);
    CHECK(l >= 8);
    CHECK(pmet_rate_converged(r) == 1);
    CHECK(pmet_rate_relative_change(r) < 1e-8);
    CHECK(pmet_rate_channel_count(r) == static_cast<size_t>((n + 1) * (m + 1)));
    double sum = 0.0;
    for (size_t i = 0; i < pmet_rate_channel_count(r); ++i) {
        pmet_channel c;
        REQUIRE(pmet_rate_channel(r, i, &c) == PMET_OK);
        CHECK(c.f_total == c.f_direct + c.f_bridge);
        sum += c.p_n * c.partial_rate;
    }
    CHECK(sum == pmet_rate_total(r));
    pmet_channel c;
    CHECK(pmet_rate_channel(r, pmet_rate_channel_count(r), &c) == PMET_ERR_INVALID_ARGUMENT);

    char* csv = nullptr;
    REQUIRE(pmet_rate_csv(r, &csv) == PMET_OK);
    CHECK(std::string(csv).rfind("record,total_rate,", 0) == 0);
    pmet_string_free(csv);

    pmet_decomposition d;
    REQUIRE(pmet_rate_decompose(sys, nullptr, &d) == PMET_OK);
    CHECK(d.total == pmet_rate_total(r));
    CHECK(std::abs(d.total - d.direct - d.bridge - d.cross) < 1e-12 * std::abs(d.cross));

    pmet_marcus_result mr;
    REQUIRE(pmet_marcus(sys, &mr) == PMET_OK);
    CHECK(mr.rate > 0.0);
    pmet_rate_free(r);
    pmet_system_free(sys);
}

TEST_CASE("overlaps")
{
    std::vector<double> a(36), o(36);
    REQUIRE(pmet_overlap_matrix(0.5, 6, a.data()) == PMET_OK);
    REQUIRE(pmet_overlap_oracle(0.5, 6, 40, o.data()) == PMET_OK);
    for (int i = 0; i < 36; ++i)
        CHECK(std::abs(a[i] - o[i]) < 1e-10);
    CHECK(a[0] == doctest::Approx(0.8824969025845957).epsilon(1e-14));
    char* csv = nullptr;
    REQUIRE(pmet_overlap_csv(0.0, 2, &csv) == PMET_OK);
    CHECK(std::string(csv).rfind("n\\m,0,1\n", 0) == 0);
    pmet_string_free(csv);

    pmet_system* sys = nullptr;
    REQUIRE(pmet_system_from_json(kOffres, &sys) == PMET_OK);
    double d = 0.0;
    REQUIRE(pmet_system_displacement(sys, "db", &d) == PMET_OK);
    CHECK(d == doctest::Approx(0.002 * 5 / 0.2).epsilon(1e-14));
    CHECK(pmet_system_displacement(sys, "xx", &d) == PMET_ERR_INVALID_ARGUMENT);
    pmet_system_free(sys);
}

TEST_CASE("sweeps")
{
    const std::string doc = std::string(R"({"system": )") + kOffres +
                            R"(, "sweep": {"axis": "g_over_omega", "values": [0, 0.01, 0.05]}})";
    pmet_sweep* sweep = nullptr;
    REQUIRE(pmet_sweep_from_json(doc.c_str(), nullptr, &sweep) == PMET_OK);
    pmet_sweep_result* one = nullptr;
    pmet_sweep_result* many = nullptr;
    REQUIRE(pmet_sweep_run(sweep, 1, 0, &one) == PMET_OK);
    REQUIRE(pmet_sweep_run(sweep, 3, 0, &many) == PMET_OK);
    REQUIRE(pmet_sweep_row_count(one) == 3);
    pmet_sweep_row row;
    REQUIRE(pmet_sweep_row_get(one, 2, &row) == PMET_OK);
    CHECK(row.value == 0.05);
    CHECK(row.converged == 1);
    CHECK(pmet_sweep_row_get(one, 3, &row) == PMET_ERR_INVALID_ARGUMENT);

    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(pmet_sweep_csv(one, &a) == PMET_OK);
    REQUIRE(pmet_sweep_csv(many, &b) == PMET_OK);
    CHECK(std::string(a) == std::string(b));
    pmet_string_free(a);
    pmet_string_free(b);

    char* meta = nullptr;
    REQUIRE(pmet_sweep_metadata(one, &meta) == PMET_OK);
    CHECK(std::string(meta).find("config_hash") != std::string::npos);
    pmet_string_free(meta);

    pmet_sweep_result_free(one);
    pmet_sweep_result_free(many);
    pmet_sweep_free(sweep);

    CHECK(pmet_sweep_from_json(R"({"system": {}, "sweep": {}})", nullptr, &sweep) == PMET_ERR_CONFIG);
}

TEST_CASE("validation suite")
{
    char* report = nullptr;
    CHECK(pmet_validate(&report) == PMET_OK);
    REQUIRE(report != nullptr);
    CHECK(std::string(report).find("FAIL") == std::string::npos);
    pmet_string_free(report);
    CHECK(pmet_max_workers() >= 1);
}
