#pragma once

#include <optional>
#include <string>

#include "covertor/gauge.hpp"

namespace covertor {

enum class VerdictKind { NotLSpaceAllEvenCovers, NotLSpaceThisCover, Inconclusive };

std::string to_string(VerdictKind kind);

struct JonesCertificate {
  Integer det;     // |J(-1)|
  Integer jprime;  // J'(-1)
};

/// Inputs a verdict rests on. Fields not used by a given route stay empty.
struct VerdictCertificate {
  std::optional<JonesCertificate> jones;
  std::optional<int> n;
  std::optional<Rational> lefschetz;
  std::optional<FroyshovInput> froyshov;
  std::optional<bool> qhs;
  bool concordance_invariant = false;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  VerdictCertificate certificate;
};

JonesCertificate jones_certificate(const KnotPresentation& k);

/// det = 1 and J'(-1) != 0 rule out an L-space for every even-degree cyclic
/// branched cover. The rule is one-directional: anything else is Inconclusive.
Verdict jones_verdict(const JonesCertificate& cert);

/// A nonzero Lefschetz number on reduced monopole homology forces HM_red != 0,
/// so the n-fold cover is not an L-space. For prime-power n the verdict holds
/// for every knot smoothly concordant to this one.
Verdict lefschetz_verdict(const GaugeInputs& in);

}  // namespace covertor
