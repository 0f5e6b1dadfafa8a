#pragma once

#include <memory>
#include <vector>

#include "covertor/matrix.hpp"
#include "covertor/polynomial.hpp"

namespace covertor {

/// Element of Z[t]/(Phi_d), i.e. of the ring of integers of the d-th
/// cyclotomic field, as a reduced coefficient vector of length phi(d).
class CycloElt {
 public:
  CycloElt() : CycloElt(1) {}
  explicit CycloElt(int conductor);
  static CycloElt from_laurent(const LaurentPoly& p, int conductor);
  static CycloElt from_integer(const Integer& c, int conductor);

  int conductor() const noexcept { return conductor_; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  /// Complex conjugation, t -> t^{-1}.
  CycloElt conj() const;

  CycloElt operator-() const;
  friend CycloElt operator+(const CycloElt& a, const CycloElt& b);
  friend CycloElt operator-(const CycloElt& a, const CycloElt& b);
  friend CycloElt operator*(const CycloElt& a, const CycloElt& b);
  friend bool operator==(const CycloElt& a, const CycloElt& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

 private:
  CycloElt(int conductor, std::shared_ptr<const IntPoly> modulus, const IntPoly& unreduced);

  int conductor_;
  std::shared_ptr<const IntPoly> modulus_;
  std::vector<Integer> coeffs_;
};

using CycloMatrix = Matrix<CycloElt>;

/// Exact rank over the cyclotomic field Q(zeta_d).
int cyclotomic_rank(const CycloMatrix& m);

}  // namespace covertor
