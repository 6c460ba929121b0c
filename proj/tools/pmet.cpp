// pmet: command-line front end over the C API.
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "pmet/pmet.h"

namespace {

int exit_code(pmet_status st)
{
    switch (st) {
    case PMET_OK: return 0;
    case PMET_ERR_CONFIG: return 2;
    case PMET_ERR_SINGULARITY: return 3;
    case PMET_ERR_NONCONVERGENCE: return 4;
    default: return 1;
    }
}

struct Failure {
    pmet_status status;
};

void check(pmet_status st)
{
    if (st != PMET_OK)
        throw Failure{st};
}

struct StringDeleter {
    void operator()(char* s) const { pmet_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct SystemDeleter {
    void operator()(pmet_system* s) const { pmet_system_free(s); }
};
struct RateDeleter {
    void operator()(pmet_rate_result* r) const { pmet_rate_free(r); }
};
struct SweepDeleter {
    void operator()(pmet_sweep* s) const { pmet_sweep_free(s); }
};
struct SweepResultDeleter {
    void operator()(pmet_sweep_result* r) const { pmet_sweep_result_free(r); }
};

std::unique_ptr<pmet_system, SystemDeleter> load_system(const std::string& path)
{
    pmet_system* sys = nullptr;
    check(pmet_system_from_file(path.c_str(), &sys));
    return std::unique_ptr<pmet_system, SystemDeleter>(sys);
}

void emit(const std::string& out, const char* text)
{
    check(pmet_write_text(out.empty() ? nullptr : out.c_str(), text));
}

struct Options {
    std::string config;
    std::string out;
    std::string mode;
    std::string pathway = "total";
    std::string which;
    bool skip_poles = false;
    unsigned workers = 1;
    double d = 0.0;
    std::size_t size = 8;
};

void run_marcus(const Options& o)
{
    auto sys = load_system(o.config);
    char* csv = nullptr;
    check(pmet_marcus_csv(sys.get(), &csv));
    OwnedString owned(csv);
    emit(o.out, csv);
}

void run_rate(const Options& o)
{
    auto sys = load_system(o.config);
    if (!o.mode.empty()) {
        const pmet_mode want = o.mode == "resonant" ? PMET_MODE_RESONANT : PMET_MODE_OFF_RESONANT;
        if (want != pmet_system_mode(sys.get())) {
            std::fprintf(stderr, "error: --mode %s does not match the mode of %s\n", o.mode.c_str(), o.config.c_str());
            throw Failure{PMET_ERR_CONFIG};
        }
    }
    pmet_rate_options opts = pmet_rate_options_default();
    opts.pathway = o.pathway == "direct" ? PMET_PATHWAY_DIRECT : o.pathway == "bridge" ? PMET_PATHWAY_BRIDGE : PMET_PATHWAY_TOTAL;
    opts.skip_poles = o.skip_poles ? 1 : 0;
    opts.workers = o.workers;
    pmet_rate_result* raw = nullptr;
    check(pmet_rate_compute(sys.get(), &opts, &raw));
    std::unique_ptr<pmet_rate_result, RateDeleter> result(raw);
    if (const int skipped = pmet_rate_poles_skipped(raw); skipped > 0)
        std::fprintf(stderr, "warning: skipped %d channel(s) at photon-shifted resonances\n", skipped);
    char* csv = nullptr;
    check(pmet_rate_csv(raw, &csv));
    OwnedString owned(csv);
    emit(o.out, csv);
}

void run_sweep(const Options& o)
{
    pmet_sweep* raw_sweep = nullptr;
    check(pmet_sweep_from_file(o.config.c_str(), &raw_sweep));
    std::unique_ptr<pmet_sweep, SweepDeleter> sweep(raw_sweep);
    pmet_sweep_result* raw = nullptr;
    check(pmet_sweep_run(raw_sweep, o.workers, o.skip_poles ? 1 : 0, &raw));
    std::unique_ptr<pmet_sweep_result, SweepResultDeleter> result(raw);

    int skipped = 0;
    for (std::size_t i = 0; i < pmet_sweep_row_count(raw); ++i) {
        pmet_sweep_row row;
        check(pmet_sweep_row_get(raw, i, &row));
        skipped += row.poles_skipped;
    }
    if (skipped > 0)
        std::fprintf(stderr, "warning: skipped %d channel(s) at photon-shifted resonances\n", skipped);

    char* csv = nullptr;
    check(pmet_sweep_csv(raw, &csv));
    OwnedString owned(csv);
    emit(o.out, csv);
    if (!o.out.empty() && o.out != "-") {
        char* meta = nullptr;
        check(pmet_sweep_metadata(raw, &meta));
        OwnedString owned_meta(meta);
        emit(o.out + ".meta.json", meta);
    }
}

void run_overlap(const Options& o)
{
    double d = o.d;
    if (!o.config.empty()) {
        auto sys = load_system(o.config);
        check(pmet_system_displacement(sys.get(), o.which.empty() ? "da" : o.which.c_str(), &d));
    }
    char* csv = nullptr;
    check(pmet_overlap_csv(d, o.size, &csv));
    OwnedString owned(csv);
    emit(o.out, csv);
}

void run_validate()
{
    char* report = nullptr;
    const pmet_status st = pmet_validate(&report);
    if (report) {
        OwnedString owned(report);
        std::fputs(report, stdout);
    }
    check(st);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cavity-modified donor-bridge-acceptor electron-transfer rates"};
    app.require_subcommand(1);
    Options o;

    auto* marcus = app.add_subcommand("marcus", "Cavity-free superexchange Marcus rate (one CSV row)");
    marcus->add_option("--config", o.config, "System config (JSON)")->required()->check(CLI::ExistingFile);
    marcus->add_option("--out", o.out, "Output CSV (default stdout)");

    auto* rate = app.add_subcommand("rate", "Cavity rate: summary row plus one row per (n, m) channel");
    rate->add_option("--config", o.config, "System config (JSON)")->required()->check(CLI::ExistingFile);
    rate->add_option("--out", o.out, "Output CSV (default stdout)");
    rate->add_option("--mode", o.mode, "Expected mode; must match the config")
        ->transform(CLI::IsMember({"resonant", "offres", "off_resonant"}));
    rate->add_option("--pathway", o.pathway, "Amplitude used in |F|^2")->check(CLI::IsMember({"total", "direct", "bridge"}));
    rate->add_flag("--skip-poles", o.skip_poles, "Drop channels at photon-shifted resonances instead of failing");
    rate->add_option("--workers", o.workers, "Worker threads (0 = all)");

    auto* sweep = app.add_subcommand("sweep", "Parameter sweep; writes CSV and, with --out, a .meta.json sidecar");
    sweep->add_option("--config", o.config, "Sweep document (JSON)")->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", o.out, "Output CSV (default stdout)");
    sweep->add_flag("--skip-poles", o.skip_poles, "Drop channels at photon-shifted resonances instead of failing");
    sweep->add_option("--workers", o.workers, "Worker threads (0 = all)");

    auto* overlap = app.add_subcommand("overlap", "Dump a displacement-operator overlap matrix");
    overlap->add_option("--d", o.d, "Displacement");
    overlap->add_option("--size", o.size, "Matrix size")->check(CLI::PositiveNumber);
    overlap->add_option("--config", o.config, "Take d from a system config")->check(CLI::ExistingFile);
    overlap->add_option("--which", o.which, "Overlap family with --config")->check(CLI::IsMember({"da", "db", "ba"}));
    overlap->add_option("--out", o.out, "Output CSV (default stdout)");

    auto* validate = app.add_subcommand("validate", "Run the oracle and reduction self-checks");

    CLI11_PARSE(app, argc, argv);
    if (o.mode == "off_resonant")
        o.mode = "offres";

    try {
        if (*marcus)
            run_marcus(o);
        else if (*rate)
            run_rate(o);
        else if (*sweep)
            run_sweep(o);
        else if (*overlap)
            run_overlap(o);
        else if (*validate)
            run_validate();
    } catch (const Failure& f) {
        const char* msg = pmet_last_error();
        if (msg && *msg)
            std::fprintf(stderr, "error: %s\n", msg);
        return exit_code(f.status);
    }
    return 0;
}
