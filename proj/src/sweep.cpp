#include "sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "config.hpp"
#include "error.hpp"
#include "offres.hpp"
#include "parallel.hpp"
#include "resonant.hpp"
#include "truncation.hpp"

namespace pmet {

using nlohmann::json;

std::string_view to_string(SweepAxis axis)
{
    switch (axis) {
    case SweepAxis::g_over_omega: return "g_over_omega";
    case SweepAxis::hbar_omega_c: return "hbar_omega_c";
    case SweepAxis::bridge_gap: return "bridge_gap";
    case SweepAxis::v_symmetric: return "v_symmetric";
    }
    return "g_over_omega";
}

SweepAxis parse_axis(const std::string& text)
{
    for (SweepAxis a : {SweepAxis::g_over_omega, SweepAxis::hbar_omega_c, SweepAxis::bridge_gap, SweepAxis::v_symmetric})
        if (text == to_string(a))
            return a;
    throw ConfigError("axis", "unknown sweep axis \"" + text + "\"");
}

PathwayMode parse_pathway(const std::string& text)
{
    if (text == "total")
        return PathwayMode::total;
    if (text == "direct" || text == "direct_only")
        return PathwayMode::direct_only;
    if (text == "bridge" || text == "bridge_only")
        return PathwayMode::bridge_only;
    throw ConfigError("pathway", "expected total, direct or bridge, got \"" + text + "\"");
}

SystemInputs apply_axis(const SystemInputs& base, SweepAxis axis, double value)
{
    SystemInputs in = base;
    switch (axis) {
    case SweepAxis::g_over_omega:
        in.chi.reset();
        in.hbar_g_c = value * in.hbar_omega_c;
        break;
    case SweepAxis::hbar_omega_c: in.hbar_omega_c = value; break;
    case SweepAxis::bridge_gap: in.u_b = in.u_d + value; break;
    case SweepAxis::v_symmetric:
        in.v_db = value;
        in.v_ba = value;
        break;
    }
    return in;
}

void validate_sweep(const SweepSpec& spec)
{
    if (spec.values.empty())
        throw ConfigError("values", "sweep needs at least one value");
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        if (!std::isfinite(spec.values[i]))
            throw ConfigError("values", "sweep values must be finite");
        if (i > 0 && !(spec.values[i] > spec.values[i - 1]))
            throw ConfigError("values", "sweep values must be strictly increasing");
    }
    if (spec.axis == SweepAxis::g_over_omega && spec.values.front() < 0.0)
        throw ConfigError("values", "g_over_omega must be non-negative");
    build_system(spec.base);
}

RateResult pmet_rate(const SystemSpec& spec, const RateOptions& options)
{
    return spec.mode() == CavityMode::resonant ? pmet_rate_resonant(spec, options) : pmet_rate_offres(spec, options);
}

namespace {

[[noreturn]] void rethrow_annotated(const std::string& prefix)
{
    try {
        throw;
    } catch (const ConfigError& e) {
        throw ConfigError(e.key(), prefix + e.what());
    } catch (const SingularityError& e) {
        throw SingularityError(prefix + e.what(), e.n(), e.m(), e.l());
    } catch (const NonConvergenceError& e) {
        throw NonConvergenceError(prefix + e.what(), e.cap(), e.last_delta());
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(prefix + e.what());
    } catch (const IoError& e) {
        throw IoError(prefix + e.what());
    }
}

SweepRow evaluate_point(const SweepSpec& spec, double value, bool skip_poles)
{
    SweepRow row;
    row.value = value;
    try {
        const SystemSpec system = build_system(apply_axis(spec.base, spec.axis, value));
        RateOptions opt;
        opt.skip_poles = skip_poles;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        RateResult r;
        if (system.mode() == CavityMode::off_resonant && spec.pathway == PathwayMode::total) {
            PathwayDecomposition dec = decompose_offres(system, opt);
            row.total = dec.total;
            row.direct = dec.direct;
            row.bridge = dec.bridge;
            r = std::move(dec.result);
        } else {
            opt.pathway = spec.pathway;
            r = pmet_rate(system, opt);
            row.total = row.direct = row.bridge = nan;
            if (system.mode() == CavityMode::off_resonant) {
                // The columns always come from the total-pathway table.
                RateOptions total = opt;
                total.pathway = PathwayMode::total;
                const PathwayDecomposition dec = decompose_offres(system, total);
                row.total = dec.total;
                row.direct = dec.direct;
                row.bridge = dec.bridge;
            }
        }
        row.rate = r.total_rate;
        row.cutoffs = r.truncation_used;
        row.converged = r.converged;
        row.poles_skipped = r.poles_skipped;
        row.history = std::move(r.history);
    } catch (const Error&) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", value);
        rethrow_annotated(std::string("at ") + std::string(to_string(spec.axis)) + " = " + buf + ": ");
    }
    return row;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options)
{
    validate_sweep(spec);
    SweepResult out;
    out.axis = spec.axis;
    out.mode = spec.mode();
    out.pathway = spec.pathway;
    out.config_hash = config_hash(spec);
    out.rows.resize(spec.values.size());
    parallel_for(spec.values.size(), std::max(1u, options.workers),
                 [&](std::size_t i) { out.rows[i] = evaluate_point(spec, spec.values[i], options.skip_poles); });
    return out;
}

std::vector<double> make_grid(bool log_spacing, double lo, double hi, int count)
{
    if (count < 1)
        throw ConfigError("count", "grid needs at least one point");
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
        throw ConfigError("max", "grid needs finite min <= max");
    if (count == 1) {
        if (lo != hi)
            throw ConfigError("count", "a one-point grid needs min == max");
        return {lo};
    }
    if (log_spacing && !(lo > 0.0))
        throw ConfigError("min", "log grid needs min > 0");
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / (count - 1);
        v[i] = log_spacing ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))) : lo + t * (hi - lo);
    }
    v.front() = lo;
    v.back() = hi;
    return v;
}

namespace {

std::string string_field(const json& obj, const char* key, const std::string& fallback)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return fallback;
    if (!it->is_string())
        throw ConfigError(key, "expected a string");
    return it->get<std::string>();
}

double number_field(const json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw ConfigError(key, "missing required field");
    return parse_energy(*it, key);
}

}  // namespace

SweepSpec sweep_from_json(const json& doc, const std::filesystem::path& base_dir)
{
    try {
        if (!doc.is_object())
            throw ConfigError("", "sweep document must be a JSON object");
        for (const auto& [key, _] : doc.items())
            if (key != "system" && key != "system_file" && key != "sweep")
                throw ConfigError(key, "unknown field");
        SweepSpec spec;
        if (doc.contains("system") == doc.contains("system_file"))
            throw ConfigError("system", "specify exactly one of system and system_file");
        if (doc.contains("system")) {
            spec.base = inputs_from_json(doc.at("system"));
        } else {
            if (!doc.at("system_file").is_string())
                throw ConfigError("system_file", "expected a path string");
            std::filesystem::path p = doc.at("system_file").get<std::string>();
            if (p.is_relative())
                p = base_dir / p;
            spec.base = inputs_from_json(json::parse(read_text_file(p)));
        }

        auto sw = doc.find("sweep");
        if (sw == doc.end() || !sw->is_object())
            throw ConfigError("sweep", "missing sweep object");
        for (const auto& [key, _] : sw->items())
            if (key != "axis" && key != "values" && key != "grid" && key != "pathway")
                throw ConfigError(key, "unknown field in sweep");
        spec.axis = parse_axis(string_field(*sw, "axis", ""));
        spec.pathway = parse_pathway(string_field(*sw, "pathway", "total"));

        if (sw->contains("values") == sw->contains("grid"))
            throw ConfigError("values", "specify exactly one of values and grid");
        if (auto it = sw->find("values"); it != sw->end()) {
            if (!it->is_array())
                throw ConfigError("values", "expected an array");
            for (const json& v : *it)
                spec.values.push_back(spec.axis == SweepAxis::g_over_omega ? v.get<double>() : parse_energy(v, "values"));
        } else {
            const json& g = sw->at("grid");
            if (!g.is_object())
                throw ConfigError("grid", "expected an object");
            for (const auto& [key, _] : g.items())
                if (key != "spacing" && key != "min" && key != "max" && key != "count" && key != "include_zero")
                    throw ConfigError(key, "unknown field in grid");
            const std::string spacing = string_field(g, "spacing", "linear");
            if (spacing != "log" && spacing != "linear")
                throw ConfigError("spacing", "expected log or linear");
            if (!g.contains("count") || !g.at("count").is_number_integer())
                throw ConfigError("count", "expected an integer");
            const bool include_zero = g.value("include_zero", false);
            const double lo = spec.axis == SweepAxis::g_over_omega ? g.at("min").get<double>() : number_field(g, "min");
            const double hi = spec.axis == SweepAxis::g_over_omega ? g.at("max").get<double>() : number_field(g, "max");
            if (include_zero)
                spec.values.push_back(0.0);
            for (double v : make_grid(spacing == "log", lo, hi, g.at("count").get<int>()))
                spec.values.push_back(v);
        }
        validate_sweep(spec);
        return spec;
    } catch (const json::exception& e) {
        throw ConfigError("", std::string("malformed sweep document: ") + e.what());
    }
}

SweepSpec sweep_from_json_text(const std::string& text, const std::filesystem::path& base_dir)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("invalid JSON: ") + e.what());
    }
    return sweep_from_json(doc, base_dir);
}

SweepSpec sweep_from_file(const std::filesystem::path& path)
{
    return sweep_from_json_text(read_text_file(path), path.parent_path());
}

json to_json(const SweepSpec& spec)
{
    json j;
    j["system"] = to_json(spec.base);
    j["sweep"]["axis"] = std::string(to_string(spec.axis));
    j["sweep"]["values"] = spec.values;
    j["sweep"]["pathway"] = std::string(to_string(spec.pathway));
    return j;
}

std::string fnv1a_hex(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string config_hash(const SweepSpec& spec)
{
    return fnv1a_hex(to_json(spec).dump());
}

TruncationStudy converge_truncation(const SystemSpec& spec, double tol)
{
    if (!(tol > 0.0 && tol < 1.0))
        throw InvalidArgument("truncation tolerance must lie in (0, 1)");
    SystemInputs in = spec.inputs();
    in.truncation.mode = TruncationMode::adaptive;
    in.truncation.tol = tol;
    const RateResult r = pmet_rate(build_system(in));
    TruncationStudy study;
    study.history = r.history;
    study.cutoffs = r.history.size() >= 2 ? r.history[r.history.size() - 2].cutoffs : r.truncation_used;
    return study;
}

}  // namespace pmet
