#include "config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "error.hpp"

namespace pmet {

using nlohmann::json;

namespace {

const std::set<std::string>& known_keys()
{
    static const std::set<std::string> keys = {
        "mode",        "u_d",          "u_b",        "u_a",     "u_b_minus_u_d", "u_d_minus_u_a",
        "v_db",        "v_ba",         "lambda_da",  "hbar_omega_c", "chi",      "hbar_g_c",
        "mu_da",       "mu_dd",        "mu_aa",      "mu_db",   "mu_ba",         "d_db",
        "d_ba",        "d_da",         "temperature", "n_max",  "l_max",         "m_max",
        "truncation",  "tol",
    };
    return keys;
}

// Splits "1.5 meV" into (1.5, "meV"). A missing unit yields an empty suffix.
std::pair<double, std::string> split_quantity(const std::string& text, const std::string& key)
{
    const char* begin = text.data();
    const char* end = begin + text.size();
    while (begin < end && *begin == ' ')
        ++begin;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{})
        throw ConfigError(key, "cannot parse number from \"" + text + "\"");
    while (ptr < end && *ptr == ' ')
        ++ptr;
    std::string unit(ptr, end);
    while (!unit.empty() && unit.back() == ' ')
        unit.pop_back();
    return {value, unit};
}

double parse_number(const json& value, const std::string& key)
{
    if (!value.is_number())
        throw ConfigError(key, "expected a number");
    return value.get<double>();
}

double parse_temperature(const json& value, const std::string& key)
{
    if (value.is_number())
        return value.get<double>();
    if (!value.is_string())
        throw ConfigError(key, "expected a number or a string such as \"300 K\"");
    auto [number, unit] = split_quantity(value.get<std::string>(), key);
    if (unit.empty() || unit == "K")
        return number;
    throw ConfigError(key, "unsupported temperature unit \"" + unit + "\"");
}

int parse_cutoff(const json& value, const std::string& key)
{
    if (!value.is_number_integer())
        throw ConfigError(key, "expected an integer");
    const auto v = value.get<long long>();
    if (v < 1 || v > 1'000'000)
        throw ConfigError(key, "cutoff must be >= 1");
    return static_cast<int>(v);
}

const json& require(const json& record, const char* key)
{
    auto it = record.find(key);
    if (it == record.end())
        throw ConfigError(key, "missing required field");
    return *it;
}

}  // namespace

double parse_energy(const json& value, const std::string& key)
{
    if (value.is_number())
        return value.get<double>();
    if (!value.is_string())
        throw ConfigError(key, "expected a number (eV) or a string such as \"5 meV\"");
    auto [number, unit] = split_quantity(value.get<std::string>(), key);
    if (unit.empty() || unit == "eV")
        return number;
    if (unit == "meV")
        return number / 1000.0;
    throw ConfigError(key, "unsupported energy unit \"" + unit + "\" (use eV or meV)");
}

SystemInputs inputs_from_json(const json& record)
{
    if (!record.is_object())
        throw ConfigError("", "config must be a JSON object");
    for (const auto& [key, _] : record.items())
        if (!known_keys().contains(key))
            throw ConfigError(key, "unknown field");

    SystemInputs in;
    const json& mode_value = require(record, "mode");
    if (!mode_value.is_string())
        throw ConfigError("mode", "expected a string");
    const std::string mode = mode_value.get<std::string>();
    if (mode == "resonant")
        in.mode = CavityMode::resonant;
    else if (mode == "off_resonant" || mode == "offres")
        in.mode = CavityMode::off_resonant;
    else
        throw ConfigError("mode", "expected \"resonant\" or \"off_resonant\", got \"" + mode + "\"");

    auto energy = [&](const char* key) { return parse_energy(require(record, key), key); };

    // Site energies.
    const bool abs_b = record.contains("u_b");
    const bool abs_a = record.contains("u_a");
    const bool rel_b = record.contains("u_b_minus_u_d");
    const bool rel_a = record.contains("u_d_minus_u_a");
    if (abs_b == rel_b)
        throw ConfigError("u_b", "specify exactly one of u_b and u_b_minus_u_d");
    if (abs_a == rel_a)
        throw ConfigError("u_a", "specify exactly one of u_a and u_d_minus_u_a");
    if ((abs_a || abs_b) && !record.contains("u_d"))
        throw ConfigError("u_d", "missing required field (absolute site energies given)");
    in.u_d = record.contains("u_d") ? energy("u_d") : 0.0;
    in.u_b = abs_b ? energy("u_b") : in.u_d + energy("u_b_minus_u_d");
    in.u_a = abs_a ? energy("u_a") : in.u_d - energy("u_d_minus_u_a");

    in.v_db = energy("v_db");
    in.v_ba = energy("v_ba");
    in.lambda_da = energy("lambda_da");
    in.hbar_omega_c = energy("hbar_omega_c");
    if (record.contains("chi"))
        in.chi = energy("chi");
    if (record.contains("hbar_g_c"))
        in.hbar_g_c = energy("hbar_g_c");
    if (!in.chi && !in.hbar_g_c)
        throw ConfigError("chi", "missing required field (or give hbar_g_c)");

    if (in.mode == CavityMode::resonant) {
        in.mu_da = parse_number(require(record, "mu_da"), "mu_da");
        in.mu_dd = parse_number(require(record, "mu_dd"), "mu_dd");
        in.mu_aa = parse_number(require(record, "mu_aa"), "mu_aa");
        for (const char* k : {"mu_db", "mu_ba", "d_db", "d_ba", "d_da"})
            if (record.contains(k))
                throw ConfigError(k, "off-resonant dipole given in resonant mode");
    } else {
        in.mu_db = parse_number(require(record, "mu_db"), "mu_db");
        in.mu_ba = parse_number(require(record, "mu_ba"), "mu_ba");
        // Permanent-dipole differences default to the SystemInputs values.
        for (auto [key, field] : {std::pair{"d_db", &in.d_db}, {"d_ba", &in.d_ba}, {"d_da", &in.d_da}})
            if (auto it = record.find(key); it != record.end())
                *field = parse_number(*it, key);
        for (const char* k : {"mu_da", "mu_dd", "mu_aa"})
            if (record.contains(k))
                throw ConfigError(k, "resonant dipole given in off_resonant mode");
    }

    in.temperature = parse_temperature(require(record, "temperature"), "temperature");

    if (auto it = record.find("n_max"); it != record.end())
        in.truncation.n_max = parse_cutoff(*it, "n_max");
    if (auto it = record.find("l_max"); it != record.end())
        in.truncation.l_max = parse_cutoff(*it, "l_max");
    if (auto it = record.find("m_max"); it != record.end())
        in.truncation.m_max = parse_cutoff(*it, "m_max");
    if (auto it = record.find("truncation"); it != record.end()) {
        const std::string t = it->is_string() ? it->get<std::string>() : std::string();
        if (t == "fixed")
            in.truncation.mode = TruncationMode::fixed;
        else if (t == "adaptive")
            in.truncation.mode = TruncationMode::adaptive;
        else
            throw ConfigError("truncation", "expected \"fixed\" or \"adaptive\"");
    }
    if (auto it = record.find("tol"); it != record.end())
        in.truncation.tol = parse_number(*it, "tol");
    return in;
}

SystemSpec system_from_json(const json& record)
{
    try {
        return build_system(inputs_from_json(record));
    } catch (const json::exception& e) {
        throw ConfigError("", std::string("malformed config: ") + e.what());
    }
}

SystemSpec system_from_json_text(const std::string& text)
{
    json record;
    try {
        record = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("invalid JSON: ") + e.what());
    }
    return system_from_json(record);
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SystemSpec system_from_file(const std::filesystem::path& path)
{
    return system_from_json_text(read_text_file(path));
}

json to_json(const SystemInputs& in)
{
    json j;
    j["mode"] = std::string(to_string(in.mode));
    j["u_d"] = in.u_d;
    j["u_b"] = in.u_b;
    j["u_a"] = in.u_a;
    j["v_db"] = in.v_db;
    j["v_ba"] = in.v_ba;
    j["lambda_da"] = in.lambda_da;
    j["hbar_omega_c"] = in.hbar_omega_c;
    if (in.chi)
        j["chi"] = *in.chi;
    if (in.hbar_g_c)
        j["hbar_g_c"] = *in.hbar_g_c;
    if (in.mode == CavityMode::resonant) {
        j["mu_da"] = in.mu_da;
        j["mu_dd"] = in.mu_dd;
        j["mu_aa"] = in.mu_aa;
    } else {
        j["mu_db"] = in.mu_db;
        j["mu_ba"] = in.mu_ba;
        j["d_db"] = in.d_db;
        j["d_ba"] = in.d_ba;
        j["d_da"] = in.d_da;
    }
    j["temperature"] = in.temperature;
    j["n_max"] = in.truncation.n_max;
    j["l_max"] = in.truncation.l_max;
    j["m_max"] = in.truncation.m_max;
    j["truncation"] = in.truncation.mode == TruncationMode::fixed ? "fixed" : "adaptive";
    j["tol"] = in.truncation.tol;
    return j;
}

json to_json(const SystemSpec& spec)
{
    return to_json(spec.inputs());
}

}  // namespace pmet
