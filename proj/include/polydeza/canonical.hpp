#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polydeza/plane_graph.hpp"

namespace polydeza {

/* Canonical form of a sphere embedding, invariant under relabelling,
 * re-rooting and reflection. Two plane graphs get equal codes exactly when
 * their embeddings are homeomorphic as (possibly reflected) sphere maps; for
 * polyhedra this coincides with abstract isomorphism.
 *
 * The code is the lexicographic minimum, over all 2q root darts and both
 * orientations, of the breadth-first code that lists for each vertex (in
 * discovery order) the labels of its neighbours in rotation order starting
 * from the entry dart, each vertex terminated by 0. Labels are 1-based bytes,
 * so the order cap is 255. Cost O(q^2). */
using CanonicalCode = std::vector<uint8_t>;

CanonicalCode canonical_code(const PlaneGraph& g);

/* Rebuild an embedding from a code: section i is vertex i's neighbour list
 * in rotation order (1-based, 0-terminated). decode_code(canonical_code(g))
 * is the canonical representative of g's isomorphism class, so storing codes
 * alone suffices to reproduce graphs byte-identically. */
PlaneGraph decode_code(const CanonicalCode& code);

std::string code_hex(const CanonicalCode& code);

} // namespace polydeza
