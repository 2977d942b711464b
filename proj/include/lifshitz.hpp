#pragma once

// Umbrella header for the numerical library. The front-end output helpers
// (lifshitz/report.hpp) are left out because they pull in a JSON library.

#include "lifshitz/abelplana.hpp"
#include "lifshitz/asymptotics.hpp"
#include "lifshitz/config.hpp"
#include "lifshitz/errors.hpp"
#include "lifshitz/fit.hpp"
#include "lifshitz/kernel.hpp"
#include "lifshitz/matsubara.hpp"
#include "lifshitz/permittivity.hpp"
#include "lifshitz/quadrature.hpp"
#include "lifshitz/reduced.hpp"
#include "lifshitz/special.hpp"
#include "lifshitz/thermo.hpp"
#include "lifshitz/units.hpp"
#include "lifshitz/verify.hpp"
