#pragma once

#include "cflp/alpha.hpp"
#include "cflp/calculus.hpp"
#include "cflp/errors.hpp"
#include "cflp/fracpoly.hpp"
#include "cflp/hypergeometric.hpp"
#include "cflp/invariants.hpp"
#include "cflp/legendre.hpp"
#include "cflp/linalg.hpp"
#include "cflp/quad.hpp"
#include "cflp/rational.hpp"
#include "cflp/shifted.hpp"
#include "cflp/solver.hpp"
