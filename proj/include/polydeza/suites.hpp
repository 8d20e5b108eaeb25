#pragma once

#include <string>
#include <vector>

#include "polydeza/plane_graph.hpp"

namespace polydeza {

/* Verification suites: each one sweeps a population of graphs and checks a
 * single structural claim on every member, reporting violations by canonical
 * code. Suites are pure functions of their population, so any population
 * source (generators, fixtures, files) can be swept. */

struct Violation {
  std::string code_hex;
  std::string expected;
  std::string observed;
};

struct SuiteReport {
  std::string suite;
  std::string population;
  long checked = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  long wall_ms = 0;
  bool pass() const { return violations.empty(); }
  std::string to_json() const;
};

/* Population spec grammar:
 *   quartic:N | cubic:N | tri:N | quad:N   generator streams up to order N
 *   fixtures | fixtures:TAG                built-in corpus (optional filter)
 *   table2                                 disconnected/low-connectivity
 *                                          family examples
 *   file:PATH                              planar_code stream from a file
 */
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& suite, const std::string& population,
                      int threads = 1);

} // namespace polydeza
