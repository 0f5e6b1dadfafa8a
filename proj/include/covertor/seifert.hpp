#pragma once

#include <map>

#include "covertor/matrix.hpp"
#include "covertor/notation.hpp"
#include "covertor/polynomial.hpp"
#include "covertor/signature.hpp"

namespace covertor {

/// Linking form V of a Seifert surface, a 2g x 2g integer matrix with
/// det(V - V^T) = 1.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  /// Validates even size and det(V - V^T) = 1.
  explicit SeifertMatrix(IntMatrix v, std::optional<BraidWord> source = std::nullopt);

  const IntMatrix& matrix() const noexcept { return v_; }
  int size() const noexcept { return v_.rows(); }
  int genus() const noexcept { return v_.rows() / 2; }
  const std::optional<BraidWord>& source() const noexcept { return source_; }

 private:
  IntMatrix v_;
  std::optional<BraidWord> source_;
};

/// Seifert matrix of the Bennequin surface of a braid closure: one band
/// generator for each pair of consecutive letters with equal index.
SeifertMatrix seifert_matrix(const BraidWord& b);

/// Block sum, the Seifert matrix of a connected sum.
SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);

/// det(V - t V^T) as an integer polynomial of degree <= 2g; equal to t^g Delta(t).
IntPoly alexander_numerator(const SeifertMatrix& v);

/// Delta(t) = t^{-g} det(V - t V^T), so that Delta(1) = 1 and Delta(t) = Delta(1/t).
LaurentPoly alexander(const SeifertMatrix& v);

/// |Delta(-1)| = |det(V + V^T)|.
Integer knot_determinant(const SeifertMatrix& v);

enum class SignatureMode { Strict, Averaged };

/// Tristram-Levine signature: signature and nullity of the Hermitian form
/// (1 - w) V + (1 - conj w) V^T at w = exp(2 pi i m / n), 0 < m < n.
/// The right-handed trefoil has signature -2.
///
/// Strict mode throws DegenerateAtRoot when Delta(w) = 0. Averaged mode then
/// returns the mean of the one-sided limits, sampled at the roots of unity
/// exp(2 pi i (m 2^j +- 1) / (n 2^j)) for growing j until they stabilize,
/// together with the exact nullity at w.
SignatureResult tl_signature(const SeifertMatrix& v, int m, int n, SignatureMode mode = SignatureMode::Strict,
                             const PrecisionPolicy& policy = PrecisionPolicy::from_environment());

struct SignatureProfile {
  int n = 2;
  std::map<int, int> values;     // m -> sign_{m/n}
  std::map<int, int> nullities;  // m -> nullity
  long sum = 0;
};

/// All strict signatures for 1 <= m <= n-1. Throws NotRationalHomologySphere
/// when Delta vanishes at some nontrivial n-th root of unity.
SignatureProfile signature_profile(const SeifertMatrix& v, int n,
                                   const PrecisionPolicy& policy = PrecisionPolicy::from_environment());

long tl_signature_sum(const SeifertMatrix& v, int n,
                      const PrecisionPolicy& policy = PrecisionPolicy::from_environment());

/// Brieskorn lattice-point count for the Milnor fiber of x^p + y^q + z^n:
/// #{(i,j,k) : i/p + j/q + k/n mod 2 in (0,1)} - #{... in (1,2)}, with
/// 1 <= i < p, 1 <= j < q, 1 <= k < n.
long milnor_fiber_signature_oracle(int p, int q, int n);

}  // namespace covertor
