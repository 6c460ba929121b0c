#pragma once

// Unit system: energies in eV, temperature in K, time in s.

namespace pmet {

inline constexpr double kBoltzmannEvPerK = 8.617333262e-5;  // CODATA 2018, exact
inline constexpr double kHbarEvS = 6.582119569e-16;          // CODATA 2018, exact
inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Energy denominators closer to zero than this are treated as resonances.
inline constexpr double kPoleGuardEv = 1e-9;

/// Channels with |F| below this contribute nothing representable.
inline constexpr double kNegligibleCouplingEv = 1e-300;

}  // namespace pmet
