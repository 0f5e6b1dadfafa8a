#include "covertor/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "covertor/error.hpp"

namespace covertor {

namespace {

bool is_separator(char ch) { return std::isspace(static_cast<unsigned char>(ch)) || ch == ','; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int_token(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(token) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    if (j > i) out.push_back(parse_int_token(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Walks every component of a diagram whose labels each occur exactly twice.
// Returns, per component, the labels in orientation order, and for every
// crossing whether its over-strand enters through position d (index 3).
struct Traversal {
  std::vector<std::vector<int>> components;
  std::vector<bool> over_enters_at_d;
};

Traversal traverse(const std::vector<Crossing>& crossings) {
  struct Occurrence {
    int crossing;
    int position;
  };
  std::map<int, std::vector<Occurrence>> where;
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
    for (int p = 0; p < 4; ++p) where[crossings[i][p]].push_back({i, p});
  }

  Traversal out;
  out.over_enters_at_d.assign(crossings.size(), false);
  std::map<int, bool> visited;
  for (const auto& [label, occ] : where) visited[label] = false;

  auto other = [&](int label, Occurrence o) {
    const auto& occ = where.at(label);
    return (occ[0].crossing == o.crossing && occ[0].position == o.position) ? occ[1] : occ[0];
  };

  auto walk = [&](int start_label, Occurrence head) {
    std::vector<int> component;
    int label = start_label;
    while (!visited[label]) {
      visited[label] = true;
      component.push_back(label);
      const int out_pos = (head.position + 2) % 4;
      if (head.position == 3) out.over_enters_at_d[head.crossing] = true;
      const int next = crossings[head.crossing][out_pos];
      head = other(next, {head.crossing, out_pos});
      label = next;
    }
    out.components.push_back(std::move(component));
  };

  // Components carrying an under-passage get the orientation a -> c.
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
    const int a = crossings[i][0];
    if (!visited[a]) walk(a, {i, 0});
  }
  // Components that only pass over: orientation is arbitrary.
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
    const int b = crossings[i][1];
    if (!visited[b]) walk(b, {i, 1});
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw Error(ErrorCode::ValidationError, "strand count must be positive");
  for (int e : letters_) {
    if (e == 0) throw Error(ErrorCode::ValidationError, "zero braid letter");
    if (std::abs(e) > strands_ - 1) {
      throw Error(ErrorCode::ValidationError,
                  "letter " + std::to_string(e) + " out of range for " + std::to_string(strands_) + " strands");
    }
  }
}

int BraidWord::writhe() const noexcept {
  int w = 0;
  for (int e : letters_) w += e > 0 ? 1 : -1;
  return w;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << "k=" << strands_ << ";";
  for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << letters_[i];
  return os.str();
}

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
  const int labels = 2 * static_cast<int>(crossings_.size());
  std::vector<int> count(labels + 1, 0);
  for (const auto& x : crossings_) {
    for (int label : x) {
      if (label < 1 || label > labels) {
        throw Error(ErrorCode::ValidationError,
                    "arc label " + std::to_string(label) + " outside 1.." + std::to_string(labels));
      }
      ++count[label];
    }
  }
  for (int label = 1; label <= labels; ++label) {
    if (count[label] != 2) {
      throw Error(ErrorCode::ValidationError, "arc label " + std::to_string(label) + " occurs " +
                                                  std::to_string(count[label]) + " times, expected 2");
    }
  }
}

int PlanarDiagram::components() const {
  if (crossings_.empty()) return 1;
  const int labels = 2 * static_cast<int>(crossings_.size());
  DisjointSets sets(labels + 1);
  for (const auto& x : crossings_) {
    sets.unite(x[0], x[2]);
    sets.unite(x[1], x[3]);
  }
  int count = 0;
  for (int label = 1; label <= labels; ++label) count += sets.find(label) == label;
  return count;
}

std::vector<int> PlanarDiagram::crossing_signs() const {
  const Traversal t = traverse(crossings_);
  std::vector<int> signs(crossings_.size());
  for (std::size_t i = 0; i < crossings_.size(); ++i) signs[i] = t.over_enters_at_d[i] ? 1 : -1;
  return signs;
}

int PlanarDiagram::writhe() const {
  const auto signs = crossing_signs();
  return std::accumulate(signs.begin(), signs.end(), 0);
}

std::string PlanarDiagram::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const auto& x = crossings_[i];
    os << (i ? " " : "") << "X(" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << ")";
  }
  return os.str();
}

const BraidWord& KnotPresentation::braid() const {
  if (const auto* b = std::get_if<BraidWord>(&diagram)) return *b;
  throw Error(ErrorCode::BraidRequired, "this computation needs a braid presentation");
}

PlanarDiagram KnotPresentation::planar_diagram() const {
  if (const auto* b = std::get_if<BraidWord>(&diagram)) return braid_to_pd(*b);
  return std::get<PlanarDiagram>(diagram);
}

// ---------------------------------------------------------------------------

BraidWord parse_braid(std::string_view text) {
  text = trim(text);
  std::optional<int> declared;
  if (text.size() >= 2 && (text[0] == 'k' || text[0] == 'K') && text[1] == '=') {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw Error(ErrorCode::ParseError, "missing ';' after strand count");
    declared = parse_int_token(trim(text.substr(2, semi - 2)));
    if (*declared < 1) throw Error(ErrorCode::ParseError, "strand count must be positive");
    text = text.substr(semi + 1);
  }
  std::vector<int> letters = parse_int_list(text);
  int max_abs = 0;
  for (int e : letters) {
    if (e == 0) throw Error(ErrorCode::ParseError, "zero braid letter");
    max_abs = std::max(max_abs, std::abs(e));
  }
  const int strands = declared.value_or(max_abs + 1);
  if (max_abs >= strands) {
    throw Error(ErrorCode::ParseError,
                "letter " + std::to_string(max_abs) + " needs more than " + std::to_string(strands) + " strands");
  }
  return BraidWord(strands, std::move(letters));
}

PlanarDiagram parse_pd(std::string_view text) {
  std::vector<Crossing> crossings;
  std::size_t i = 0;
  text = trim(text);
  // Tolerate a KnotTheory-style "PD[ ... ]" wrapper.
  if (text.size() >= 3 && text.substr(0, 2) == "PD" && (text[2] == '[' || text[2] == '(')) {
    const char close = text[2] == '[' ? ']' : ')';
    if (text.back() != close) throw Error(ErrorCode::ParseError, "unterminated PD wrapper");
    text = trim(text.substr(3, text.size() - 4));
  }
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    if (i >= text.size()) break;
    if (text[i] != 'X' && text[i] != 'x') {
      throw Error(ErrorCode::ParseError, "expected 'X(' at offset " + std::to_string(i));
    }
    ++i;
    if (i >= text.size() || (text[i] != '(' && text[i] != '[')) throw Error(ErrorCode::ParseError, "expected '(' after X");
    const char close = text[i] == '(' ? ')' : ']';
    const auto end = text.find(close, i);
    if (end == std::string_view::npos) throw Error(ErrorCode::ParseError, "unterminated crossing");
    const auto values = parse_int_list(text.substr(i + 1, end - i - 1));
    if (values.size() != 4) {
      throw Error(ErrorCode::ParseError, "crossing has " + std::to_string(values.size()) + " labels, expected 4");
    }
    crossings.push_back({values[0], values[1], values[2], values[3]});
    i = end + 1;
  }
  return PlanarDiagram(std::move(crossings));
}

int closure_components(const BraidWord& b) {
  const int k = b.strands();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  for (int e : b.letters()) {
    const int i = std::abs(e) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(k, false);
  int cycles = 0;
  for (int s = 0; s < k; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int j = s; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

bool is_knot(const BraidWord& b) { return closure_components(b) == 1; }

PlanarDiagram braid_to_pd(const BraidWord& b) {
  if (!is_knot(b)) throw Error(ErrorCode::NotAKnot, "braid closure has " + std::to_string(closure_components(b)) + " components");
  if (b.letters().empty()) return PlanarDiagram();

  const int k = b.strands();
  std::vector<int> current(k);
  std::iota(current.begin(), current.end(), 0);
  int next_arc = k;
  std::vector<Crossing> raw;
  raw.reserve(b.length());
  // Strands run upward; positions are numbered left to right.
  for (int e : b.letters()) {
    const int i = std::abs(e) - 1;
    const int left_in = current[i];
    const int right_in = current[i + 1];
    const int left_out = next_arc++;
    const int right_out = next_arc++;
    if (e > 0) {
      // Over-strand runs bottom-left to top-right.
      raw.push_back({right_in, right_out, left_out, left_in});
    } else {
      // Over-strand runs bottom-right to top-left.
      raw.push_back({left_in, right_in, right_out, left_out});
    }
    current[i] = left_out;
    current[i + 1] = right_out;
  }

  DisjointSets arcs(next_arc);
  for (int j = 0; j < k; ++j) arcs.unite(current[j], j);
  for (auto& x : raw)
    for (int& label : x) label = arcs.find(label);

  const Traversal t = traverse(raw);
  std::map<int, int> relabel;
  int label = 1;
  for (const auto& component : t.components)
    for (int arc : component) relabel[arc] = label++;
  for (auto& x : raw)
    for (int& l : x) l = relabel.at(l);
  return PlanarDiagram(std::move(raw));
}

BraidWord torus_braid(int p, int q) {
  if (p < 2 || q < 2) throw Error(ErrorCode::ValidationError, "torus knot parameters must be >= 2");
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(p) + "," + std::to_string(q) + ") != 1");
  }
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(p - 1) * q);
  for (int r = 0; r < q; ++r)
    for (int i = 1; i < p; ++i) letters.push_back(i);
  return BraidWord(p, std::move(letters));
}

BraidWord mirror(const BraidWord& b) {
  std::vector<int> letters = b.letters();
  for (int& e : letters) e = -e;
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord connected_sum(const BraidWord& b1, const BraidWord& b2) {
  if (!is_knot(b1)) throw Error(ErrorCode::NotAKnot, "first summand is not a knot");
  if (!is_knot(b2)) throw Error(ErrorCode::NotAKnot, "second summand is not a knot");
  const int shift = b1.strands() - 1;
  std::vector<int> letters = b1.letters();
  for (int e : b2.letters()) letters.push_back(e > 0 ? e + shift : e - shift);
  return BraidWord(b1.strands() + b2.strands() - 1, std::move(letters));
}

BraidWord unknot_braid() { return BraidWord(1, {}); }

}  // namespace covertor
