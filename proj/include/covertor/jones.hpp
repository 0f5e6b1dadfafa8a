#pragma once

#include "covertor/notation.hpp"
#include "covertor/polynomial.hpp"

namespace covertor {

inline constexpr int kDefaultCrossingCap = 24;

struct JonesReport {
  LaurentPoly jones;            // in t
  Integer det;                  // |J(-1)|
  Integer jprime_at_minus_one;  // J'(-1)
};

/// Kauffman bracket <D> in the variable A, normalized so the empty diagram
/// gives 1, with loop value -A^2 - A^-2. At crossing (a,b,c,d) the
/// A-smoothing joins a-b and c-d.
///
/// Crossings are contracted one at a time in a greedy frontier order; each
/// partial state is the planar matching of the open arc ends, so work grows
/// with the frontier width rather than with 2^crossings.
LaurentPoly kauffman_bracket(const PlanarDiagram& d, int max_crossings = kDefaultCrossingCap);

/// J(t) = (-A)^{-3w} <D> with t = A^{-4}. Positive braids close to
/// right-handed knots, so the right trefoil gives -t^4 + t^3 + t.
LaurentPoly jones_polynomial(const PlanarDiagram& d, int max_crossings = kDefaultCrossingCap);

JonesReport jones(const KnotPresentation& k, int max_crossings = kDefaultCrossingCap);

}  // namespace covertor
