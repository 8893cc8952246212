#pragma once

// Umbrella header: exact even central moments of binomial sums, argmax
// analysis in p, and moment-optimized Chebyshev sample-size planning.

#include "chebmom/argmax.hpp"
#include "chebmom/combinatorics.hpp"
#include "chebmom/errors.hpp"
#include "chebmom/moments.hpp"
#include "chebmom/montecarlo.hpp"
#include "chebmom/planner.hpp"
#include "chebmom/polynomial.hpp"
#include "chebmom/rational.hpp"
#include "chebmom/recurrence.hpp"
#include "chebmom/sturm.hpp"
