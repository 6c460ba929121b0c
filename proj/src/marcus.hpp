#pragma once

#include "params.hpp"

namespace pmet {

// Sign convention: delta_g is the free-energy change of the D -> A step as
// written in the rate expressions (U_A - U_D plus corrections). The driving
// force is -delta_g; the activation energy is (delta_g + lambda)^2 / (4 lambda).

struct MarcusResult {
    double v_eff = 0.0;       // eV
    double delta_g = 0.0;     // eV
    double activation = 0.0;  // eV
    double rate = 0.0;        // 1/s
};

/// Bridge-mediated D-A coupling -(v_db v_ba / 2)(1/gap_ba + 1/gap_db), with
/// gap_ba = U_B - U_A and gap_db = U_B - U_D. Throws SingularityError when a
/// gap is within the pole guard of zero.
double superexchange_coupling(double v_db, double v_ba, double gap_ba, double gap_db);

/// (U_A - U_D) - v_ba^2 / gap_ba + v_db^2 / gap_db.
double effective_driving_force(double u_a_minus_u_d, double v_db, double v_ba, double gap_ba, double gap_db);

/// Nonadiabatic Marcus rate 2 pi |v|^2 / hbar * sqrt(1 / (4 pi lambda kT)) * exp(-(dG + lambda)^2 / (4 lambda kT)).
double marcus_rate(double v_eff, double delta_g, double lambda, double kT);

/// Golden-rule channel rate |F|^2 / hbar * sqrt(pi / (lambda kT)) * exp(-(dG + lambda)^2 / (4 lambda kT)).
/// Algebraically identical to marcus_rate; kept as a separate code path.
double fgr_channel_rate(double coupling, double delta_g, double lambda, double kT);

/// Cavity-free rate for the molecular and thermal parameters of `spec`.
MarcusResult marcus(const SystemSpec& spec);

}  // namespace pmet
