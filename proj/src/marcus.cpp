#include "marcus.hpp"

#include <cmath>
#include <string>

#include "constants.hpp"
#include "error.hpp"

namespace pmet {

namespace {

void check_gap(double gap, const char* name)
{
    if (std::abs(gap) < kPoleGuardEv)
        throw SingularityError(std::string("superexchange denominator ") + name + " is at resonance (|gap| < 1e-9 eV)");
}

void check_rate_inputs(double lambda, double kT)
{
    if (!(lambda > 0.0))
        throw InvalidArgument("reorganization energy must be positive");
    if (!(kT > 0.0))
        throw InvalidArgument("kT must be positive");
}

}  // namespace

double superexchange_coupling(double v_db, double v_ba, double gap_ba, double gap_db)
{
    check_gap(gap_ba, "U_B - U_A");
    check_gap(gap_db, "U_B - U_D");
    return -(v_db * v_ba / 2.0) * (1.0 / gap_ba + 1.0 / gap_db);
}

double effective_driving_force(double u_a_minus_u_d, double v_db, double v_ba, double gap_ba, double gap_db)
{
    check_gap(gap_ba, "U_B - U_A");
    check_gap(gap_db, "U_B - U_D");
    return u_a_minus_u_d - v_ba * v_ba / gap_ba + v_db * v_db / gap_db;
}

double marcus_rate(double v_eff, double delta_g, double lambda, double kT)
{
    check_rate_inputs(lambda, kT);
    const double shifted = delta_g + lambda;
    return 2.0 * kPi * v_eff * v_eff / kHbarEvS * std::sqrt(1.0 / (4.0 * kPi * lambda * kT)) *
           std::exp(-shifted * shifted / (4.0 * lambda * kT));
}

double fgr_channel_rate(double coupling, double delta_g, double lambda, double kT)
{
    check_rate_inputs(lambda, kT);
    const double shifted = delta_g + lambda;
    return coupling * coupling / kHbarEvS * std::sqrt(kPi / (lambda * kT)) *
           std::exp(-shifted * shifted / (4.0 * lambda * kT));
}

MarcusResult marcus(const SystemSpec& spec)
{
    const MolecularParams& mol = spec.molecular();
    MarcusResult r;
    r.v_eff = superexchange_coupling(mol.v_db, mol.v_ba, mol.gap_ba(), mol.gap_db());
    r.delta_g = effective_driving_force(mol.u_a - mol.u_d, mol.v_db, mol.v_ba, mol.gap_ba(), mol.gap_db());
    const double shifted = r.delta_g + mol.lambda_da;
    r.activation = shifted * shifted / (4.0 * mol.lambda_da);
    r.rate = marcus_rate(r.v_eff, r.delta_g, mol.lambda_da, spec.thermal().kT);
    return r;
}

}  // namespace pmet
