#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "params.hpp"
#include "rate.hpp"

namespace pmet {

enum class SweepAxis { g_over_omega, hbar_omega_c, bridge_gap, v_symmetric };

std::string_view to_string(SweepAxis axis);

/// What each axis value overwrites in the base record:
///   g_over_omega  hbar_g_c = value * hbar_omega_c (chi is derived)
///   hbar_omega_c  hbar_omega_c = value
///   bridge_gap    u_b = u_d + value, so U_B - U_A follows from the fixed U_D - U_A
///   v_symmetric   v_db = v_ba = value
struct SweepSpec {
    SystemInputs base;
    SweepAxis axis = SweepAxis::g_over_omega;
    std::vector<double> values;  // nonempty, strictly increasing
    PathwayMode pathway = PathwayMode::total;

    CavityMode mode() const { return base.mode; }
};

struct SweepRow {
    double value = 0.0;
    double rate = 0.0;  // selected pathway
    // Off-resonant only, read from one total-pathway table; NaN in resonant mode.
    double total = 0.0;
    double direct = 0.0;
    double bridge = 0.0;
    Cutoffs cutoffs;
    bool converged = false;
    int poles_skipped = 0;
    std::vector<TruncationStep> history;
};

struct SweepResult {
    SweepAxis axis = SweepAxis::g_over_omega;
    CavityMode mode = CavityMode::resonant;
    PathwayMode pathway = PathwayMode::total;
    std::vector<SweepRow> rows;  // input value order
    std::string config_hash;
};

struct SweepOptions {
    unsigned workers = 1;
    bool skip_poles = false;
};

/// Applies one axis value to a copy of `base`.
SystemInputs apply_axis(const SystemInputs& base, SweepAxis axis, double value);

/// Checks the SweepSpec invariants; throws ConfigError.
void validate_sweep(const SweepSpec& spec);

/// Evaluates every point, re-converging truncation per point. Points run in
/// parallel; rows keep input order. Kernel errors carry the axis value.
SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

// Sweep documents:
//   {"system": {...} | "system_file": "path relative to the sweep file",
//    "sweep": {"axis": "g_over_omega",
//              "values": [..] | "grid": {"spacing": "log"|"linear", "min", "max", "count", "include_zero"},
//              "pathway": "total"|"direct"|"bridge"}}
SweepSpec sweep_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
SweepSpec sweep_from_json_text(const std::string& text, const std::filesystem::path& base_dir = {});
SweepSpec sweep_from_file(const std::filesystem::path& path);
nlohmann::json to_json(const SweepSpec& spec);

/// Grid of `count` points on [lo, hi], log or linear spaced.
std::vector<double> make_grid(bool log_spacing, double lo, double hi, int count);

PathwayMode parse_pathway(const std::string& text);
SweepAxis parse_axis(const std::string& text);

/// 64-bit FNV-1a of the canonical JSON form of the sweep, as 16 hex digits.
std::string config_hash(const SweepSpec& spec);
std::string fnv1a_hex(const std::string& bytes);

/// Truncation study: staircase from the system's cutoffs at tolerance tol,
/// returning the smallest cutoffs whose doubling changed the rate by less than
/// tol, plus every (cutoffs, rate) evaluated.
struct TruncationStudy {
    Cutoffs cutoffs;
    std::vector<TruncationStep> history;
};

TruncationStudy converge_truncation(const SystemSpec& spec, double tol);

/// Rate for either mode, dispatching on spec.mode().
RateResult pmet_rate(const SystemSpec& spec, const RateOptions& options = {});

}  // namespace pmet
