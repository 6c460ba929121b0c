#pragma once

#include <optional>
#include <string_view>

namespace pmet {

enum class CavityMode { resonant, off_resonant };

std::string_view to_string(CavityMode mode);

/// Diabatic donor/bridge/acceptor parameters, all in eV.
/// The direct D-A coupling is fixed at zero by the model and has no field.
struct MolecularParams {
    double u_d = 0.0;
    double u_b = 0.0;
    double u_a = 0.0;
    double v_db = 0.0;
    double v_ba = 0.0;
    double lambda_da = 0.0;

    double gap_db() const { return u_b - u_d; }  // U_B - U_D
    double gap_ba() const { return u_b - u_a; }  // U_B - U_A
    double u_d_minus_u_a() const { return u_d - u_a; }

    bool operator==(const MolecularParams&) const = default;
};

/// Dimensionless dipole moments. Only the members of the active mode are meaningful.
///
/// resonant:     mu_da (D-A transition), mu_dd and mu_aa (permanent).
/// off_resonant: mu_db, mu_ba (transitions) and the permanent differences
///               d_db = mu_DD - mu_BB, d_ba = mu_BB - mu_AA, d_da = mu_DD - mu_AA.
///               The three differences are independent inputs; they need not add up.
struct DipoleSet {
    CavityMode mode = CavityMode::resonant;
    double mu_da = 0.0;
    double mu_dd = 0.0;
    double mu_aa = 0.0;
    double mu_db = 0.0;
    double mu_ba = 0.0;
    double d_db = 0.0;
    double d_ba = 0.0;
    double d_da = 0.0;

    bool operator==(const DipoleSet&) const = default;
};

/// Single cavity mode. hbar_g_c = chi * (first transition dipole);
/// hbar_eta_c = chi * mu_ba in off-resonant mode and 0 otherwise.
struct CavityParams {
    double hbar_omega_c = 0.0;
    double chi = 0.0;
    double hbar_g_c = 0.0;
    double hbar_eta_c = 0.0;

    double g_over_omega() const { return hbar_g_c / hbar_omega_c; }

    bool operator==(const CavityParams&) const = default;
};

struct ThermalParams {
    double temperature = 0.0;  // K
    double kT = 0.0;           // eV
    double beta = 0.0;         // 1/eV

    bool operator==(const ThermalParams&) const = default;
};

enum class TruncationMode { fixed, adaptive };

/// Photon-number cutoffs: n (donor), l (bridge, off-resonant only), m (acceptor).
struct TruncationPolicy {
    int n_max = 8;
    int l_max = 8;
    int m_max = 8;
    TruncationMode mode = TruncationMode::adaptive;
    double tol = 1e-8;

    bool operator==(const TruncationPolicy&) const = default;
};

/// Unvalidated field record, as read from a config file. `build_system` turns it
/// into a SystemSpec or reports the first offending key.
struct SystemInputs {
    CavityMode mode = CavityMode::resonant;

    double u_d = 0.0;
    double u_b = 0.0;
    double u_a = 0.0;
    double v_db = 0.0;
    double v_ba = 0.0;
    double lambda_da = 0.0;

    double hbar_omega_c = 0.0;
    // Exactly one of these two must be set.
    std::optional<double> chi;
    std::optional<double> hbar_g_c;

    double mu_da = 1.0;
    double mu_dd = 5.0;
    double mu_aa = -5.0;
    double mu_db = 1.0;
    double mu_ba = 1.0;
    double d_db = 5.0;
    double d_ba = 5.0;
    double d_da = 1.0;

    double temperature = 300.0;
    TruncationPolicy truncation;

    bool operator==(const SystemInputs&) const = default;
};

/// A complete, validated system description. Immutable once built.
class SystemSpec {
public:
    const MolecularParams& molecular() const { return molecular_; }
    const CavityParams& cavity() const { return cavity_; }
    const DipoleSet& dipoles() const { return dipoles_; }
    const ThermalParams& thermal() const { return thermal_; }
    const TruncationPolicy& truncation() const { return truncation_; }
    CavityMode mode() const { return dipoles_.mode; }

    /// The record this spec was built from; rebuilding it yields an identical spec.
    const SystemInputs& inputs() const { return inputs_; }

    bool operator==(const SystemSpec&) const = default;

private:
    friend SystemSpec build_system(const SystemInputs&);
    SystemSpec() = default;

    SystemInputs inputs_;
    MolecularParams molecular_;
    CavityParams cavity_;
    DipoleSet dipoles_;
    ThermalParams thermal_;
    TruncationPolicy truncation_;
};

/// Validates `in` and derives kT, beta, hbar_g_c and hbar_eta_c.
/// Throws ConfigError naming the offending key.
SystemSpec build_system(const SystemInputs& in);

/// k_B * T in eV. Throws InvalidArgument for T <= 0.
double boltzmann_kT(double temperature);

}  // namespace pmet
