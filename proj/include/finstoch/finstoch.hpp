#ifndef FINSTOCH_FINSTOCH_HPP
#define FINSTOCH_FINSTOCH_HPP

// Umbrella header: exact stochastic matrices over finite measurable spaces,
// their category structure, disintegration, and the ergodic decomposition of
// invariant measures of finite dynamical systems.

#include "finstoch/cli.hpp"
#include "finstoch/disintegration.hpp"
#include "finstoch/dot.hpp"
#include "finstoch/dynamics.hpp"
#include "finstoch/error.hpp"
#include "finstoch/kernel.hpp"
#include "finstoch/laws.hpp"
#include "finstoch/random.hpp"
#include "finstoch/rational.hpp"
#include "finstoch/serialize.hpp"
#include "finstoch/space.hpp"

#endif // FINSTOCH_FINSTOCH_HPP
