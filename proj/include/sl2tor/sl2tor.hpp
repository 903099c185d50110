#pragma once

// Umbrella header.

#include "sl2tor/boundary.hpp"
#include "sl2tor/cohomology.hpp"
#include "sl2tor/coinvariants.hpp"
#include "sl2tor/combinat.hpp"
#include "sl2tor/divpow.hpp"
#include "sl2tor/integer.hpp"
#include "sl2tor/invariants.hpp"
#include "sl2tor/matrix.hpp"
#include "sl2tor/modforms.hpp"
#include "sl2tor/polyspace.hpp"
#include "sl2tor/serialize.hpp"
#include "sl2tor/smith.hpp"
