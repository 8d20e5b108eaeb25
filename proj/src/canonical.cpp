#include "polydeza/canonical.hpp"

#include <string>

#include "polydeza/errors.hpp"

namespace polydeza {
namespace {

/* Generates breadth-first codes for rooted oriented starts, sharing scratch
 * arrays across the 4q candidates. Vertex labels are epoch-stamped so no
 * per-candidate clearing is needed. */
class Coder {
public:
  explicit Coder(const PlaneGraph& g)
      : g_(g),
        label_(static_cast<size_t>(g.n()), 0),
        stamp_(static_cast<size_t>(g.n()), -1),
        entry_(static_cast<size_t>(g.n()), -1) {
    order_.reserve(static_cast<size_t>(g.n()));
  }

  /* Writes the code for root dart d0 (reflected = rotations read backwards)
   * into cur, comparing against best as it goes. Returns true iff the code
   * completed strictly smaller than best (best == nullptr counts as larger
   * than everything); aborts early otherwise. */
  bool run(int d0, bool reflect, const CanonicalCode* best, CanonicalCode& cur) {
    ++epoch_;
    order_.clear();
    cur.clear();
    int root = g_.dart(d0).tail;
    set_label(root, 1);
    entry_[root] = d0;
    order_.push_back(root);
    int next = 2;
    bool lower = best == nullptr;
    size_t pos = 0;
    for (size_t idx = 0; idx < order_.size(); ++idx) {
      int v = order_[idx];
      int d = entry_[v];
      int deg = g_.degree(v);
      for (int k = 0; k < deg; ++k) {
        int u = g_.dart(d).head;
        if (get_label(u) == 0) {
          set_label(u, next++);
          entry_[u] = g_.rev(d);
          order_.push_back(u);
        }
        if (!emit(static_cast<uint8_t>(get_label(u)), best, cur, pos, lower)) return false;
        d = reflect ? g_.sigma_prev(d) : g_.sigma_next(d);
      }
      if (!emit(0, best, cur, pos, lower)) return false;
    }
    return lower;
  }

private:
  static bool emit(uint8_t byte, const CanonicalCode* best, CanonicalCode& cur,
                   size_t& pos, bool& lower) {
    if (!lower) {
      uint8_t b = (*best)[pos];
      if (byte > b) return false;
      if (byte < b) lower = true;
    }
    cur.push_back(byte);
    ++pos;
    return true;
  }

  int get_label(int v) const { return stamp_[v] == epoch_ ? label_[v] : 0; }
  void set_label(int v, int l) {
    stamp_[v] = epoch_;
    label_[v] = l;
  }

  const PlaneGraph& g_;
  std::vector<int> label_, stamp_, entry_, order_;
  int epoch_ = 0;
};

} // namespace

CanonicalCode canonical_code(const PlaneGraph& g) {
  if (g.n() > 255)
    fail(ErrorKind::OrderOverflow, "order " + std::to_string(g.n()) + " exceeds 255");
  if (g.dart_count() == 0) return CanonicalCode{0};

  Coder coder(g);
  CanonicalCode best, cur;
  size_t len = static_cast<size_t>(g.dart_count()) + g.n();
  best.reserve(len);
  cur.reserve(len);
  for (int d = 0; d < g.dart_count(); ++d)
    for (int reflect = 0; reflect < 2; ++reflect)
      if (coder.run(d, reflect == 1, best.empty() ? nullptr : &best, cur)) best.swap(cur);
  return best;
}

PlaneGraph decode_code(const CanonicalCode& code) {
  if (code.empty()) fail(ErrorKind::MalformedPlanarCode, "empty code");
  std::vector<std::vector<int>> rot(1);
  for (size_t i = 0; i < code.size(); ++i) {
    if (code[i] == 0) {
      if (i + 1 < code.size()) rot.emplace_back();
    } else {
      rot.back().push_back(code[i] - 1);
    }
  }
  if (code.back() != 0) fail(ErrorKind::MalformedPlanarCode, "unterminated vertex section");
  return PlaneGraph::build(rot);
}

std::string code_hex(const CanonicalCode& code) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (uint8_t b : code) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

} // namespace polydeza
