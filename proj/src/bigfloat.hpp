#pragma once

#include <mpfr.h>

#include <utility>

namespace covertor::detail {

/// Owning MPFR value with a fixed precision; arithmetic results take the
/// precision of the left operand.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits), mpfr_set_zero(v_, 1); }
  BigFloat(mpfr_prec_t bits, long value) { mpfr_init2(v_, bits), mpfr_set_si(v_, value, MPFR_RNDN); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  BigFloat& operator+=(const BigFloat& o) { return mpfr_add(v_, v_, o.v_, MPFR_RNDN), *this; }
  BigFloat& operator-=(const BigFloat& o) { return mpfr_sub(v_, v_, o.v_, MPFR_RNDN), *this; }
  BigFloat& operator*=(const BigFloat& o) { return mpfr_mul(v_, v_, o.v_, MPFR_RNDN), *this; }
  BigFloat& operator/=(const BigFloat& o) { return mpfr_div(v_, v_, o.v_, MPFR_RNDN), *this; }
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(v_); }
  BigFloat abs() const {
    BigFloat r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

}  // namespace covertor::detail
