#pragma once

// Umbrella header: triangulations of cyclic polytopes, the two higher
// Stasheff-Tamari orders, and the companion combinatorics of tilting modules
// and maximal green sequences over the higher Auslander algebras of type A.

#include "hst/errors.hpp"
#include "hst/vertex_tuple.hpp"
#include "hst/polytope.hpp"
#include "hst/triangulation.hpp"
#include "hst/bitset.hpp"
#include "hst/orders.hpp"
#include "hst/reptheory.hpp"
#include "hst/green.hpp"
#include "hst/export.hpp"
#include "hst/verify.hpp"
