#include "covertor/jones.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "covertor/error.hpp"

namespace covertor {

namespace {

// Open arc ends of a partially contracted diagram: each open label maps to
// the label at the other end of its strand.
using Frontier = std::map<int, int>;

std::vector<int> frontier_key(const Frontier& f) {
  std::vector<int> key;
  key.reserve(f.size());
  for (const auto& [label, partner] : f)
    if (label < partner) key.push_back(label), key.push_back(partner);
  return key;
}

Frontier frontier_from_key(const std::vector<int>& key) {
  Frontier f;
  for (std::size_t i = 0; i < key.size(); i += 2) f[key[i]] = key[i + 1], f[key[i + 1]] = key[i];
  return f;
}

// Joins the occurrences of labels x and y at the current crossing. Returns
// true if this closes a loop.
bool join(Frontier& f, int x, int y) {
  if (x == y) return true;  // both ends of one arc meet at this crossing
  const auto ix = f.find(x);
  const auto iy = f.find(y);
  const bool x_open = ix != f.end();
  const bool y_open = iy != f.end();
  if (x_open && ix->second == y) {
    f.erase(x);
    f.erase(y);
    return true;
  }
  const int u = x_open ? ix->second : x;
  const int v = y_open ? iy->second : y;
  if (x_open) f.erase(x);
  if (y_open) f.erase(y);
  f[u] = v;
  f[v] = u;
  return false;
}

std::vector<int> contraction_order(const std::vector<Crossing>& crossings) {
  const int c = static_cast<int>(crossings.size());
  std::vector<int> order;
  std::vector<bool> used(c, false);
  std::map<int, int> seen;  // label -> occurrences processed
  for (int step = 0; step < c; ++step) {
    int best = -1, best_score = -1;
    for (int i = 0; i < c; ++i) {
      if (used[i]) continue;
      int score = 0;
      for (int label : crossings[i]) score += seen.count(label) ? 1 : 0;
      if (score > best_score) best = i, best_score = score;
    }
    used[best] = true;
    order.push_back(best);
    for (int label : crossings[best]) ++seen[label];
  }
  return order;
}

const LaurentPoly& loop_value() {
  static const LaurentPoly d = LaurentPoly{{2, -1}, {-2, -1}};
  return d;
}

}  // namespace

LaurentPoly kauffman_bracket(const PlanarDiagram& d, int max_crossings) {
  const auto& crossings = d.crossings();
  if (static_cast<int>(crossings.size()) > max_crossings) {
    throw Error(ErrorCode::DiagramTooLarge, std::to_string(crossings.size()) + " crossings exceeds cap of " +
                                                std::to_string(max_crossings));
  }
  if (crossings.empty()) return 1;

  const LaurentPoly a_weight = LaurentPoly::monomial(1, 1);
  const LaurentPoly b_weight = LaurentPoly::monomial(1, -1);

  std::map<std::vector<int>, LaurentPoly> states;
  states[{}] = 1;
  for (int index : contraction_order(crossings)) {
    const auto& [a, b, c, e] = crossings[index];
    std::map<std::vector<int>, LaurentPoly> next;
    for (const auto& [key, poly] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        Frontier f = frontier_from_key(key);
        int loops = 0;
        if (smoothing == 0) {
          loops += join(f, a, b);
          loops += join(f, c, e);
        } else {
          loops += join(f, a, e);
          loops += join(f, b, c);
        }
        LaurentPoly term = poly * (smoothing == 0 ? a_weight : b_weight);
        for (int i = 0; i < loops; ++i) term = term * loop_value();
        next[frontier_key(f)] += term;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    states = std::move(next);
  }
  // Every state closes at least one loop; the normalization counts one fewer.
  return divide_exact(states[{}], loop_value());
}

LaurentPoly jones_polynomial(const PlanarDiagram& d, int max_crossings) {
  if (d.components() != 1) throw Error(ErrorCode::NotAKnot, "diagram has " + std::to_string(d.components()) + " components");
  const LaurentPoly bracket = kauffman_bracket(d, max_crossings);
  const int w = d.writhe();
  // (-A)^{-3w}
  const LaurentPoly framing = LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, -3L * w);
  const LaurentPoly in_a = framing * bracket;
  LaurentPoly in_t;
  for (const auto& [e, coeff] : in_a.terms()) {
    if (e % 4 != 0) throw Error(ErrorCode::NotAKnot, "bracket exponents not compatible with a knot");
    in_t += LaurentPoly::monomial(coeff, -e / 4);
  }
  return in_t;
}

JonesReport jones(const KnotPresentation& k, int max_crossings) {
  JonesReport report;
  report.jones = jones_polynomial(k.planar_diagram(), max_crossings);
  report.det = abs(report.jones.eval(-1).get_num());
  report.jprime_at_minus_one = report.jones.derivative().eval(-1).get_num();
  return report;
}

}  // namespace covertor
