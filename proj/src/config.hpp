#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "params.hpp"

namespace pmet {

// Config records are flat JSON objects whose keys match the SystemInputs field
// names. Energies are either bare numbers (eV) or strings with a unit suffix,
// e.g. "1.5 eV" or "5 meV"; temperature is a bare number (K) or "300 K".
//
// Site energies may be given absolutely (u_d, u_b, u_a) or through the
// differences "u_b_minus_u_d" and "u_d_minus_u_a", in which case u_d defaults
// to 0. Unknown keys are rejected.

/// Parses an energy value in eV. `key` is used in error messages.
double parse_energy(const nlohmann::json& value, const std::string& key);

SystemInputs inputs_from_json(const nlohmann::json& record);
SystemSpec system_from_json(const nlohmann::json& record);
SystemSpec system_from_json_text(const std::string& text);
SystemSpec system_from_file(const std::filesystem::path& path);

/// Emits the record `spec` was built from, energies as bare eV numbers.
nlohmann::json to_json(const SystemInputs& inputs);
nlohmann::json to_json(const SystemSpec& spec);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace pmet
