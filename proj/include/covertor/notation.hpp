#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace covertor {

/// A braid word on `strands` strands. Letter e > 0 is the generator
/// sigma_e, e < 0 its inverse. Invariant: 1 <= |e| <= strands - 1.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws ValidationError if a letter is zero or out of range.
  BraidWord(int strands, std::vector<int> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  int writhe() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// One PD crossing (a, b, c, d): a is the incoming under-strand, the labels
/// run counterclockwise. The under-strand leaves through c.
using Crossing = std::array<int, 4>;

class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  /// Validates that labels 1..2c each occur exactly twice.
  explicit PlanarDiagram(std::vector<Crossing> crossings);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  std::size_t size() const noexcept { return crossings_.size(); }

  /// Number of link components (closed strand cycles).
  int components() const;
  /// +1 / -1 per crossing, using the orientation induced by the under-strands.
  std::vector<int> crossing_signs() const;
  int writhe() const;
  std::string to_string() const;

 private:
  std::vector<Crossing> crossings_;
};

struct KnotPresentation {
  std::variant<BraidWord, PlanarDiagram> diagram;
  std::optional<std::string> name;

  bool is_braid() const noexcept { return std::holds_alternative<BraidWord>(diagram); }
  const BraidWord& braid() const;  // throws BraidRequired for PD input
  PlanarDiagram planar_diagram() const;
};

BraidWord parse_braid(std::string_view text);
PlanarDiagram parse_pd(std::string_view text);

int closure_components(const BraidWord& b);
bool is_knot(const BraidWord& b);

/// PD code of the braid closure. All strands run in the same direction and
/// the sign of every crossing equals the sign of its letter.
PlanarDiagram braid_to_pd(const BraidWord& b);

/// (sigma_1 ... sigma_{p-1})^q, whose closure is the right-handed T(p, q).
BraidWord torus_braid(int p, int q);
BraidWord mirror(const BraidWord& b);
BraidWord connected_sum(const BraidWord& b1, const BraidWord& b2);

/// The one-strand empty braid; its closure is the unknot.
BraidWord unknot_braid();

}  // namespace covertor
