#include "pmet/pmet.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "config.hpp"
#include "csv.hpp"
#include "error.hpp"
#include "fock.hpp"
#include "marcus.hpp"
#include "offres.hpp"
#include "parallel.hpp"
#include "resonant.hpp"
#include "sweep.hpp"
#include "validate.hpp"

struct pmet_system {
    pmet::SystemSpec spec;
};

struct pmet_rate_result {
    pmet::RateResult result;
};

struct pmet_sweep {
    pmet::SweepSpec spec;
};

struct pmet_sweep_result {
    pmet::SweepResult result;
};

namespace {

thread_local std::string last_error;

pmet_status status_of(pmet::ErrorKind kind)
{
    switch (kind) {
    case pmet::ErrorKind::config: return PMET_ERR_CONFIG;
    case pmet::ErrorKind::singularity: return PMET_ERR_SINGULARITY;
    case pmet::ErrorKind::nonconvergence: return PMET_ERR_NONCONVERGENCE;
    case pmet::ErrorKind::invalid_argument: return PMET_ERR_INVALID_ARGUMENT;
    case pmet::ErrorKind::io: return PMET_ERR_IO;
    }
    return PMET_ERR_GENERIC;
}

template <class Fn>
pmet_status guarded(Fn&& fn)
{
    try {
        last_error.clear();
        fn();
        return PMET_OK;
    } catch (const pmet::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown error";
    }
    return PMET_ERR_GENERIC;
}

void require(const void* p, const char* what)
{
    if (p == nullptr)
        throw pmet::InvalidArgument(std::string(what) + " is null");
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pmet::RateOptions convert(const pmet_rate_options* opts)
{
    const pmet_rate_options o = opts ? *opts : pmet_rate_options_default();
    pmet::RateOptions r;
    switch (o.pathway) {
    case PMET_PATHWAY_TOTAL: r.pathway = pmet::PathwayMode::total; break;
    case PMET_PATHWAY_DIRECT: r.pathway = pmet::PathwayMode::direct_only; break;
    case PMET_PATHWAY_BRIDGE: r.pathway = pmet::PathwayMode::bridge_only; break;
    default: throw pmet::InvalidArgument("unknown pathway");
    }
    r.skip_poles = o.skip_poles != 0;
    r.workers = o.workers == 0 ? pmet::max_workers() : o.workers;
    return r;
}

}  // namespace

extern "C" {

const char* pmet_last_error(void)
{
    return last_error.c_str();
}

const char* pmet_version(void)
{
    return "1.0.0";
}

void pmet_string_free(char* s)
{
    std::free(s);
}

unsigned pmet_max_workers(void)
{
    return pmet::max_workers();
}

pmet_status pmet_write_text(const char* path, const char* text)
{
    return guarded([&] {
        require(text, "text");
        pmet::emit_text(text, path ? std::filesystem::path(path) : std::filesystem::path());
    });
}

pmet_status pmet_system_from_json(const char* json, pmet_system** out)
{
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new pmet_system{pmet::system_from_json_text(json)};
    });
}

pmet_status pmet_system_from_file(const char* path, pmet_system** out)
{
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new pmet_system{pmet::system_from_file(path)};
    });
}

pmet_status pmet_system_to_json(const pmet_system* sys, char** out)
{
    return guarded([&] {
        require(sys, "system");
        require(out, "out");
        *out = dup_string(pmet::to_json(sys->spec).dump(2));
    });
}

pmet_mode pmet_system_mode(const pmet_system* sys)
{
    return sys && sys->spec.mode() == pmet::CavityMode::off_resonant ? PMET_MODE_OFF_RESONANT : PMET_MODE_RESONANT;
}

void pmet_system_free(pmet_system* sys)
{
    delete sys;
}

pmet_status pmet_marcus(const pmet_system* sys, pmet_marcus_result* out)
{
    return guarded([&] {
        require(sys, "system");
        require(out, "out");
        const pmet::MarcusResult r = pmet::marcus(sys->spec);
        *out = {r.v_eff, r.delta_g, r.activation, r.rate};
    });
}

pmet_status pmet_marcus_csv(const pmet_system* sys, char** out)
{
    return guarded([&] {
        require(sys, "system");
        require(out, "out");
        std::ostringstream os;
        pmet::write_marcus_csv(os, pmet::marcus(sys->spec));
        *out = dup_string(os.str());
    });
}

pmet_rate_options pmet_rate_options_default(void)
{
    return {PMET_PATHWAY_TOTAL, 0, 1};
}

pmet_status pmet_rate_compute(const pmet_system* sys, const pmet_rate_options* opts, pmet_rate_result** out)
{
    return guarded([&] {
        require(sys, "system");
        require(out, "out");
        *out = new pmet_rate_result{pmet::pmet_rate(sys->spec, convert(opts))};
    });
}

double pmet_rate_total(const pmet_rate_result* r)
{
    return r ? r->result.total_rate : 0.0;
}

int pmet_rate_converged(const pmet_rate_result* r)
{
    return r && r->result.converged ? 1 : 0;
}

double pmet_rate_relative_change(const pmet_rate_result* r)
{
    return r ? r->result.relative_change : 0.0;
}

int pmet_rate_poles_skipped(const pmet_rate_result* r)
{
    return r ? r->result.poles_skipped : 0;
}

void pmet_rate_truncation(const pmet_rate_result* r, int* n_max, int* l_max, int* m_max)
{
    if (!r)
        return;
    if (n_max)
        *n_max = r->result.truncation_used.n_max;
    if (l_max)
        *l_max = r->result.truncation_used.l_max;
    if (m_max)
        *m_max = r->result.truncation_used.m_max;
}

size_t pmet_rate_channel_count(const pmet_rate_result* r)
{
    return r ? r->result.table.rows.size() : 0;
}

pmet_status pmet_rate_channel(const pmet_rate_result* r, size_t index, pmet_channel* out)
{
    return guarded([&] {
        require(r, "result");
        require(out, "out");
        if (index >= r->result.table.rows.size())
            throw pmet::InvalidArgument("channel index out of range");
        const pmet::ChannelRow& c = r->result.table.rows[index];
        *out = {c.n, c.m, c.p_n, c.f_direct, c.f_bridge, c.f_total, c.delta_g, c.partial_rate, c.pole_skipped ? 1 : 0};
    });
}

pmet_status pmet_rate_csv(const pmet_rate_result* r, char** out)
{
    return guarded([&] {
        require(r, "result");
        require(out, "out");
        std::ostringstream os;
        pmet::write_rate_csv(os, r->result);
        *out = dup_string(os.str());
    });
}

void pmet_rate_free(pmet_rate_result* r)
{
    delete r;
}

pmet_status pmet_rate_decompose(const pmet_system* sys, const pmet_rate_options* opts, pmet_decomposition* out)
{
    return guarded([&] {
        require(sys, "system");
        require(out, "out");
        const pmet::PathwayDecomposition d = pmet::decompose_offres(sys->spec, convert(opts));
        *out = {d.total, d.direct, d.bridge, d.cross};
    });
}

pmet_status pmet_overlap_matrix(double d, size_t size, double* out)
{
    return guarded([&] {
        require(out, "out");
        const pmet::OverlapMatrix s = pmet::overlap_matrix({d}, size);
        std::memcpy(out, s.entries().data(), s.entries().size() * sizeof(double));
    });
}

pmet_status pmet_overlap_oracle(double d, size_t size, size_t n_work, double* out)
{
    return guarded([&] {
        require(out, "out");
        const pmet::OverlapMatrix s = pmet::overlap_matrix_oracle({d}, size, n_work);
        std::memcpy(out, s.entries().data(), s.entries().size() * sizeof(double));
    });
}

pmet_status pmet_overlap_csv(double d, size_t size, char** out)
{
    return guarded([&] {
        require(out, "out");
        std::ostringstream os;
        pmet::write_overlap_csv(os, pmet::overlap_matrix({d}, size));
        *out = dup_string(os.str());
    });
}

pmet_status pmet_system_displacement(const pmet_system* sys, const char* which, double* out)
{
    return guarded([&] {
        require(sys, "system");
        require(which, "which");
        require(out, "out");
        const std::string w = which;
        if (w != "da" && w != "db" && w != "ba")
            throw pmet::InvalidArgument("overlap family must be da, db or ba, got \"" + w + "\"");
        if (sys->spec.mode() == pmet::CavityMode::resonant) {
            const pmet::ResonantDisplacements d = pmet::resonant_displacements(sys->spec);
            *out = w == "da" ? d.da.d : w == "db" ? d.db.d : d.ba.d;
        } else {
            const pmet::OffResDisplacements d = pmet::offres_displacements(sys->spec);
            *out = w == "da" ? d.da.d : w == "db" ? d.db.d : d.ba.d;
        }
    });
}

pmet_status pmet_sweep_from_json(const char* json, const char* base_dir, pmet_sweep** out)
{
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new pmet_sweep{pmet::sweep_from_json_text(json, base_dir ? base_dir : "")};
    });
}

pmet_status pmet_sweep_from_file(const char* path, pmet_sweep** out)
{
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new pmet_sweep{pmet::sweep_from_file(path)};
    });
}

void pmet_sweep_free(pmet_sweep* sweep)
{
    delete sweep;
}

pmet_status pmet_sweep_run(const pmet_sweep* sweep, unsigned workers, int skip_poles, pmet_sweep_result** out)
{
    return guarded([&] {
        require(sweep, "sweep");
        require(out, "out");
        pmet::SweepOptions opt;
        opt.workers = workers == 0 ? pmet::max_workers() : workers;
        opt.skip_poles = skip_poles != 0;
        *out = new pmet_sweep_result{pmet::run_sweep(sweep->spec, opt)};
    });
}

size_t pmet_sweep_row_count(const pmet_sweep_result* r)
{
    return r ? r->result.rows.size() : 0;
}

pmet_status pmet_sweep_row_get(const pmet_sweep_result* r, size_t index, pmet_sweep_row* out)
{
    return guarded([&] {
        require(r, "result");
        require(out, "out");
        if (index >= r->result.rows.size())
            throw pmet::InvalidArgument("sweep row index out of range");
        const pmet::SweepRow& row = r->result.rows[index];
        *out = {row.value,          row.rate,           row.total,          row.direct,
                row.bridge,         row.cutoffs.n_max,  row.cutoffs.l_max,  row.cutoffs.m_max,
                row.converged ? 1 : 0, row.poles_skipped};
    });
}

pmet_status pmet_sweep_csv(const pmet_sweep_result* r, char** out)
{
    return guarded([&] {
        require(r, "result");
        require(out, "out");
        std::ostringstream os;
        pmet::write_sweep_csv(os, r->result);
        *out = dup_string(os.str());
    });
}

pmet_status pmet_sweep_metadata(const pmet_sweep_result* r, char** out)
{
    return guarded([&] {
        require(r, "result");
        require(out, "out");
        *out = dup_string(pmet::sweep_metadata(r->result).dump(2) + "\n");
    });
}

void pmet_sweep_result_free(pmet_sweep_result* r)
{
    delete r;
}

pmet_status pmet_validate(char** report)
{
    bool ok = false;
    const pmet_status st = guarded([&] {
        const pmet::ValidationReport rep = pmet::run_validation();
        ok = rep.passed();
        if (report) {
            std::string text;
            for (const auto& c : rep.checks)
                text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
            *report = dup_string(text);
        }
        if (!ok)
            last_error = "validation failed";
    });
    if (st != PMET_OK)
        return st;
    return ok ? PMET_OK : PMET_ERR_VALIDATION;
}

}  // extern "C"
