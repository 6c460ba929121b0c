#pragma once

#include <cmath>
#include <functional>

#include "params.hpp"
#include "validate.hpp"

namespace pmet::test {

inline SystemSpec resonant(const std::function<void(SystemInputs&)>& edit = {})
{
    SystemInputs in = reference_resonant_inputs();
    if (edit)
        edit(in);
    return build_system(in);
}

inline SystemSpec offres(const std::function<void(SystemInputs&)>& edit = {})
{
    SystemInputs in = reference_offres_inputs();
    if (edit)
        edit(in);
    return build_system(in);
}

inline double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

}  // namespace pmet::test
