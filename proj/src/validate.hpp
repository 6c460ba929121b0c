#pragma once

#include <string>
#include <vector>

#include "params.hpp"

namespace pmet {

/// On-resonance reference set: lambda 0.65 eV, degenerate wells, U_B - U_D = 1.5 eV,
/// V_DB = V_BA = 0.02 eV, hbar_omega_c = 0.86 eV, mu_da = 1, mu_dd = 5, mu_aa = -5, 300 K, chi = 0.
SystemInputs reference_resonant_inputs();

/// Off-resonance reference set: V_DB = V_BA = 5 meV, U_D - U_A = 150 meV,
/// U_B - U_D = 1.5 eV, lambda 0.65 eV, hbar_omega_c = 0.2 eV, mu_db = mu_ba = 1,
/// d_db = d_ba = 5, d_da = 1, 300 K, chi = 0.
SystemInputs reference_offres_inputs();

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool passed() const;
};

/// Overlap oracle equivalence, transpose parity, composition, and the
/// cavity-free reductions of both rate models.
ValidationReport run_validation();

}  // namespace pmet
