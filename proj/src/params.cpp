#include "params.hpp"

#include <cmath>
#include <string>

#include "constants.hpp"
#include "error.hpp"

namespace pmet {

std::string_view to_string(CavityMode mode)
{
    return mode == CavityMode::resonant ? "resonant" : "off_resonant";
}

double boltzmann_kT(double temperature)
{
    if (!(temperature > 0.0) || !std::isfinite(temperature))
        throw InvalidArgument("temperature must be positive and finite, got " + std::to_string(temperature));
    return kBoltzmannEvPerK * temperature;
}

namespace {

void require_finite(double value, const char* key)
{
    if (!std::isfinite(value))
        throw ConfigError(key, "must be finite");
}

void require_positive(double value, const char* key, const char* message)
{
    require_finite(value, key);
    if (!(value > 0.0))
        throw ConfigError(key, message);
}

void require_nonzero(double value, const char* key)
{
    require_finite(value, key);
    if (value == 0.0)
        throw ConfigError(key, "transition dipole must be nonzero");
}

}  // namespace

SystemSpec build_system(const SystemInputs& in)
{
    SystemSpec spec;
    // Fields of the inactive mode are reset so that equal physics means equal specs.
    spec.inputs_ = in;
    const SystemInputs defaults;
    if (in.mode == CavityMode::resonant) {
        spec.inputs_.mu_db = defaults.mu_db;
        spec.inputs_.mu_ba = defaults.mu_ba;
        spec.inputs_.d_db = defaults.d_db;
        spec.inputs_.d_ba = defaults.d_ba;
        spec.inputs_.d_da = defaults.d_da;
    } else {
        spec.inputs_.mu_da = defaults.mu_da;
        spec.inputs_.mu_dd = defaults.mu_dd;
        spec.inputs_.mu_aa = defaults.mu_aa;
    }

    for (auto [value, key] : {std::pair{in.u_d, "u_d"}, {in.u_b, "u_b"}, {in.u_a, "u_a"},
                              {in.v_db, "v_db"}, {in.v_ba, "v_ba"}})
        require_finite(value, key);
    require_positive(in.lambda_da, "lambda_da", "lambda_da must be positive");
    if (!(in.u_b - in.u_d > 0.0))
        throw ConfigError("u_b", "bridge must lie above the donor (u_b - u_d > 0)");
    if (!(in.u_b - in.u_a > 0.0))
        throw ConfigError("u_b", "bridge must lie above the acceptor (u_b - u_a > 0)");
    spec.molecular_ = {in.u_d, in.u_b, in.u_a, in.v_db, in.v_ba, in.lambda_da};

    require_positive(in.hbar_omega_c, "hbar_omega_c", "photon energy must be positive");

    DipoleSet& dip = spec.dipoles_;
    dip.mode = in.mode;
    double transition_1 = 0.0;
    double transition_2 = 0.0;
    if (in.mode == CavityMode::resonant) {
        require_nonzero(in.mu_da, "mu_da");
        require_finite(in.mu_dd, "mu_dd");
        require_finite(in.mu_aa, "mu_aa");
        dip.mu_da = in.mu_da;
        dip.mu_dd = in.mu_dd;
        dip.mu_aa = in.mu_aa;
        transition_1 = in.mu_da;
    } else {
        require_nonzero(in.mu_db, "mu_db");
        require_nonzero(in.mu_ba, "mu_ba");
        require_finite(in.d_db, "d_db");
        require_finite(in.d_ba, "d_ba");
        require_finite(in.d_da, "d_da");
        dip.mu_db = in.mu_db;
        dip.mu_ba = in.mu_ba;
        dip.d_db = in.d_db;
        dip.d_ba = in.d_ba;
        dip.d_da = in.d_da;
        transition_1 = in.mu_db;
        transition_2 = in.mu_ba;
    }

    if (in.chi.has_value() == in.hbar_g_c.has_value())
        throw ConfigError("chi", "specify exactly one of chi and hbar_g_c");
    CavityParams& cav = spec.cavity_;
    cav.hbar_omega_c = in.hbar_omega_c;
    if (in.chi) {
        require_finite(*in.chi, "chi");
        if (*in.chi < 0.0)
            throw ConfigError("chi", "field strength must be non-negative");
        cav.chi = *in.chi;
        cav.hbar_g_c = cav.chi * transition_1;
    } else {
        require_finite(*in.hbar_g_c, "hbar_g_c");
        cav.chi = *in.hbar_g_c / transition_1;
        if (cav.chi < 0.0)
            throw ConfigError("hbar_g_c", "implies a negative field strength chi");
        cav.hbar_g_c = *in.hbar_g_c;
    }
    cav.hbar_eta_c = cav.chi * transition_2;

    require_positive(in.temperature, "temperature", "temperature must be positive");
    spec.thermal_.temperature = in.temperature;
    spec.thermal_.kT = boltzmann_kT(in.temperature);
    spec.thermal_.beta = 1.0 / spec.thermal_.kT;

    const TruncationPolicy& tp = in.truncation;
    if (tp.n_max < 1)
        throw ConfigError("n_max", "cutoff must be >= 1");
    if (tp.l_max < 1)
        throw ConfigError("l_max", "cutoff must be >= 1");
    if (tp.m_max < 1)
        throw ConfigError("m_max", "cutoff must be >= 1");
    if (tp.mode == TruncationMode::adaptive && !(tp.tol > 0.0 && tp.tol < 1.0))
        throw ConfigError("tol", "adaptive tolerance must lie in (0, 1)");
    spec.truncation_ = tp;

    return spec;
}

}  // namespace pmet
