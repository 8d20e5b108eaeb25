#pragma once

#include <optional>

#include "polydeza/abstract_graph.hpp"
#include "polydeza/plane_graph.hpp"

namespace polydeza {

inline constexpr int kDefaultEmbedCap = 24;

/* Planarity test for arbitrary simple graphs (any component count), by
 * incremental face insertion per biconnected block. */
bool is_planar(const AbstractGraph& g);

/* Sphere embedding of a connected simple graph: nullopt when non-planar.
 * Blocks are embedded independently and merged at cut vertices. Throws
 * Disconnected for multi-component inputs and TooLarge above the cap. */
std::optional<PlaneGraph> embed(const AbstractGraph& g, int cap = kDefaultEmbedCap);

} // namespace polydeza
