#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "polydeza/abstract_graph.hpp"
#include "polydeza/plane_graph.hpp"

namespace polydeza {

/* planar_code: ">>planar_code<<" header once per stream, then per graph one
 * order byte followed by each vertex's neighbours (1-based, rotation order)
 * terminated by 0. Orders above 255 do not fit (OrderOverflow). */
extern const std::string kPlanarCodeHeader;

void write_planar_code_header(std::ostream& out);
void write_planar_code(std::ostream& out, const PlaneGraph& g);
std::vector<uint8_t> planar_code_bytes(const PlaneGraph& g); /* without header */

/* Reads an entire stream (header mandatory), invoking the sink per graph. */
void read_planar_code(std::istream& in, const std::function<void(PlaneGraph&&)>& sink);
std::vector<PlaneGraph> read_planar_code_all(std::istream& in);

/* graph6: printable ASCII encoding of the upper adjacency triangle, one graph
 * per line. Headers (">>graph6<<") are accepted and skipped on input. */
std::string to_graph6(const AbstractGraph& g);
AbstractGraph from_graph6(const std::string& line);
void read_graph6(std::istream& in, const std::function<void(AbstractGraph&&)>& sink);

} // namespace polydeza
