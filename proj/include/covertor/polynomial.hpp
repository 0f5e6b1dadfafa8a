#pragma once

#include <map>
#include <string>
#include <vector>

#include "covertor/rational.hpp"

namespace covertor {

/// Dense integer polynomial, coefficients stored low degree first with no
/// trailing zeros. The zero polynomial has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly monomial(const Integer& c, int degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  Integer coeff(int i) const { return i >= 0 && i <= degree() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  Integer eval(const Integer& x) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string(const char* var = "t") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Quotient and remainder of a by a monic divisor.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic);
/// a / b when b divides a over Z; throws ValidationError otherwise.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// The d-th cyclotomic polynomial, by exact division of t^d - 1 by the
/// cyclotomic factors of the proper divisors of d.
IntPoly cyclotomic(int d);
int euler_phi(int d);

/// |Res(p, q)|, the absolute value of the Sylvester determinant.
Integer resultant_abs(const IntPoly& p, const IntPoly& q);

/// Integer Laurent polynomial in one variable, stored sparsely with no zero
/// coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: integers convert implicitly
  LaurentPoly(std::initializer_list<std::pair<const long, Integer>> terms);
  static LaurentPoly monomial(const Integer& c, long exponent);
  static LaurentPoly from_int_poly(const IntPoly& p, long shift = 0);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<long, Integer>& terms() const noexcept { return terms_; }
  Integer coeff(long e) const;
  /// Lowest and highest exponents; both 0 for the zero polynomial.
  long min_degree() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first; }
  long max_degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiplication by t^k.
  LaurentPoly shifted(long k) const;
  /// t -> t^{-1}.
  LaurentPoly inverted() const;
  /// t -> t^k for nonzero k.
  LaurentPoly substitute_power(long k) const;
  /// Formal derivative: sum e c_e t^{e-1}.
  LaurentPoly derivative() const;
  Rational eval(const Integer& x) const;
  /// Coefficients shifted so the lowest exponent is 0.
  IntPoly polynomial_part() const;

  std::string to_string(const char* var = "t") const;

 private:
  std::map<long, Integer> terms_;
};

/// a / b for Laurent polynomials when the quotient is a Laurent polynomial.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// True iff p(exp(2 pi i m / n)) = 0, decided exactly by divisibility of the
/// polynomial part of p by the cyclotomic polynomial of order n / gcd(m, n).
bool is_zero_at_root(const LaurentPoly& p, int m, int n);

}  // namespace covertor
