#pragma once

#include <optional>

#include "covertor/cyclotomic.hpp"

namespace covertor {

/// Floating-point policy for signatures. Pivots are compared against a
/// zero tolerance of 2^-(bits - margin) relative to the matrix norm; on
/// failure the precision doubles, at most `max_escalations` times.
struct PrecisionPolicy {
  int start_bits = 128;
  int tolerance_margin_bits = 48;
  int max_escalations = 4;

  /// Default policy, with COVERTOR_PRECISION overriding `start_bits`.
  static PrecisionPolicy from_environment();
};

/// omega = exp(2 pi i m / n).
struct RootOfUnity {
  int m = 1;
  int n = 2;
  /// Multiplicative order of omega, n / gcd(m, n).
  int order() const;
};

struct SignatureResult {
  int signature = 0;
  int nullity = 0;
  int precision_bits = 0;
  friend bool operator==(const SignatureResult& a, const SignatureResult& b) {
    return a.signature == b.signature && a.nullity == b.nullity;
  }
};

/// Signature and nullity of a Hermitian matrix whose entries live in
/// Z[t]/Phi_d and are embedded by t -> omega (d = root.order()).
///
/// The nullity is exact: either supplied by the caller as a certificate, or
/// computed by elimination over Q(zeta_d). Floating point only decides the
/// signs of pivots that the certified rank says are nonzero; the complex
/// matrix is realified to a doubled real symmetric one and diagonalized by
/// congruence with Bunch-Parlett pivoting.
///
/// Throws NotHermitian, or PrecisionExhausted when a pivot the certificate
/// declares nonzero stays below tolerance at every precision.
SignatureResult hermitian_signature(const CycloMatrix& h, RootOfUnity root, const PrecisionPolicy& policy,
                                    std::optional<int> certified_nullity = std::nullopt);

using LaurentMatrix = Matrix<LaurentPoly>;

/// Same engine for a matrix of Laurent polynomials evaluated at omega. The
/// caller must supply the exact nullity and guarantee that the evaluated
/// matrix is Hermitian.
SignatureResult certified_signature(const LaurentMatrix& h, RootOfUnity root, int nullity,
                                    const PrecisionPolicy& policy);

/// Frees the calling thread's cached multiprecision constants. Worker threads
/// call this before exiting.
void release_thread_caches();

}  // namespace covertor
