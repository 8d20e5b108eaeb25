#pragma once

#include <set>
#include <vector>

#include "polydeza/canonical.hpp"

namespace polydeza {

/* Independent census of r-regular polyhedral graphs on n vertices, built
 * without any plane-graph machinery from the rest of the library: orderly
 * generation over the colex edge order (each graph canonical iff its
 * adjacency bit vector is maximal over vertex permutations), followed by
 * connectivity, 3-connectivity and a planarity embedding check. Returns the
 * set of canonical codes of the embeddings, so streams can be compared
 * exactly rather than just counted. Practical for r=3 up to n=14 and r=4 up
 * to n=13. */
std::set<CanonicalCode> oracle_regular_polyhedra(int r, int n);

} // namespace polydeza
