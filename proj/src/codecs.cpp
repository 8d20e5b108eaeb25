#include "polydeza/codecs.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "polydeza/errors.hpp"

namespace polydeza {

const std::string kPlanarCodeHeader = ">>planar_code<<";

void write_planar_code_header(std::ostream& out) { out << kPlanarCodeHeader; }

std::vector<uint8_t> planar_code_bytes(const PlaneGraph& g) {
  if (g.n() > 255)
    fail(ErrorKind::OrderOverflow, "order " + std::to_string(g.n()) + " exceeds 255");
  std::vector<uint8_t> out;
  out.reserve(static_cast<size_t>(1 + g.n() + g.dart_count()));
  out.push_back(static_cast<uint8_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    for (int w : g.rotation(v)) out.push_back(static_cast<uint8_t>(w + 1));
    out.push_back(0);
  }
  return out;
}

void write_planar_code(std::ostream& out, const PlaneGraph& g) {
  auto bytes = planar_code_bytes(g);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorKind::IoError, "write failed");
}

void read_planar_code(std::istream& in, const std::function<void(PlaneGraph&&)>& sink) {
  std::string header(kPlanarCodeHeader.size(), '\0');
  in.read(header.data(), static_cast<std::streamsize>(header.size()));
  if (in.gcount() != static_cast<std::streamsize>(header.size()) || header != kPlanarCodeHeader)
    fail(ErrorKind::MalformedPlanarCode, "missing stream header");
  for (;;) {
    int n = in.get();
    if (n == std::istream::traits_type::eof()) return;
    if (n == 0) fail(ErrorKind::MalformedPlanarCode, "order byte 0");
    std::vector<std::vector<int>> rotation(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      for (;;) {
        int b = in.get();
        if (b == std::istream::traits_type::eof())
          fail(ErrorKind::MalformedPlanarCode, "truncated adjacency list");
        if (b == 0) break;
        if (b > n)
          fail(ErrorKind::MalformedPlanarCode,
               "neighbour " + std::to_string(b) + " above order " + std::to_string(n));
        rotation[v].push_back(b - 1);
      }
    }
    PlaneGraph g;
    try {
      g = PlaneGraph::build(rotation);
    } catch (const Error& e) {
      fail(ErrorKind::MalformedPlanarCode, std::string("invalid rotation system: ") + e.what());
    }
    sink(std::move(g));
  }
}

std::vector<PlaneGraph> read_planar_code_all(std::istream& in) {
  std::vector<PlaneGraph> out;
  read_planar_code(in, [&](PlaneGraph&& g) { out.push_back(std::move(g)); });
  return out;
}

namespace {

void append_graph6_int(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
}

} // namespace

std::string to_graph6(const AbstractGraph& g) {
  int n = g.n();
  if (n > 258047) fail(ErrorKind::OrderOverflow, "order above graph6 limit");
  std::string out;
  append_graph6_int(out, n);
  int bit = 5;
  char acc = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(u, v)) acc |= static_cast<char>(1 << bit);
      if (--bit < 0) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bit = 5;
      }
    }
  if (bit != 5) out.push_back(static_cast<char>(acc + 63));
  return out;
}

AbstractGraph from_graph6(const std::string& line) {
  size_t pos = 0;
  if (line.rfind(">>graph6<<", 0) == 0) pos = 10;
  if (pos >= line.size()) fail(ErrorKind::MalformedGraph6, "empty line");
  int n;
  if (static_cast<unsigned char>(line[pos]) == 126) {
    if (pos + 3 >= line.size()) fail(ErrorKind::MalformedGraph6, "truncated order");
    n = ((line[pos + 1] - 63) << 12) | ((line[pos + 2] - 63) << 6) | (line[pos + 3] - 63);
    pos += 4;
  } else {
    n = line[pos] - 63;
    ++pos;
  }
  if (n < 0) fail(ErrorKind::MalformedGraph6, "bad order byte");
  AbstractGraph g(n);
  long bits = static_cast<long>(n) * (n - 1) / 2;
  long need = (bits + 5) / 6;
  if (static_cast<long>(line.size() - pos) < need)
    fail(ErrorKind::MalformedGraph6, "truncated adjacency bits");
  long idx = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++idx) {
      int c = line[pos + idx / 6] - 63;
      if (c < 0 || c > 63) fail(ErrorKind::MalformedGraph6, "byte out of range");
      if ((c >> (5 - idx % 6)) & 1) g.add_edge(u, v);
    }
  return g;
}

void read_graph6(std::istream& in, const std::function<void(AbstractGraph&&)>& sink) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    sink(from_graph6(line));
  }
}

} // namespace polydeza
