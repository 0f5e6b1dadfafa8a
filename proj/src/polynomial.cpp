#include "covertor/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "covertor/error.hpp"
#include "covertor/matrix.hpp"

namespace covertor {

namespace {

std::string format_terms(const std::map<long, Integer>& terms, const char* var) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const long e = it->first;
    Integer c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return os.str();
}

}  // namespace

// --- IntPoly ---------------------------------------------------------------

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string(const char* var) const {
  std::map<long, Integer> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) terms[static_cast<long>(i)] = coeffs_[i];
  return format_terms(terms, var);
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic) {
  if (monic.is_zero() || monic.leading() != 1) throw Error(ErrorCode::ValidationError, "divisor is not monic");
  std::vector<Integer> rem = a.coeffs();
  const int db = monic.degree();
  if (a.degree() < db) return {IntPoly(), a};
  std::vector<Integer> quot(a.degree() - db + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    const Integer c = rem[i];
    if (c == 0) continue;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * monic.coeffs()[j];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  if (a.is_zero()) return {};
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) throw Error(ErrorCode::ValidationError, "inexact polynomial division");
  std::vector<Integer> quot(a.degree() - db + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), b.leading().get_mpz_t())) {
      throw Error(ErrorCode::ValidationError, "inexact polynomial division");
    }
    const Integer c = rem[i] / b.leading();
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw Error(ErrorCode::ValidationError, "inexact polynomial division");
  return IntPoly(std::move(quot));
}

int euler_phi(int d) {
  int result = d;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

IntPoly cyclotomic(int d) {
  if (d < 1) throw Error(ErrorCode::ValidationError, "cyclotomic order must be positive");
  // Phi_e = (t^e - 1) / prod_{f | e, f < e} Phi_f over the divisors of d.
  std::vector<int> divisors;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) divisors.push_back(e);
  std::map<int, IntPoly> phi;
  for (int e : divisors) {
    IntPoly p = IntPoly::monomial(1, e) - IntPoly({1});
    for (int f : divisors) {
      if (f >= e) break;
      if (e % f == 0) p = divmod_monic(p, phi.at(f)).first;
    }
    phi.emplace(e, std::move(p));
  }
  return phi.at(d);
}

Integer resultant_abs(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of a zero polynomial");
  const int m = p.degree();
  const int n = q.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    Integer r = 1;
    for (int i = 0; i < n; ++i) r *= p.coeff(0);
    return abs(r);
  }
  if (n == 0) {
    Integer r = 1;
    for (int i = 0; i < m; ++i) r *= q.coeff(0);
    return abs(r);
  }
  // Sylvester matrix: n shifted copies of p, m shifted copies of q.
  IntMatrix s(m + n, m + n, Integer(0));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s(r, r + i) = p.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s(n + r, r + i) = q.coeff(n - i);
  return abs(determinant(std::move(s)));
}

// --- LaurentPoly -----------------------------------------------------------

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const long, Integer>> terms) {
  for (const auto& [e, c] : terms)
    if (c != 0) terms_[e] += c;
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::monomial(const Integer& c, long exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_[exponent] = c;
  return p;
}

LaurentPoly LaurentPoly::from_int_poly(const IntPoly& p, long shift) {
  LaurentPoly out;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) out.terms_[i + shift] = p.coeff(i);
  return out;
}

Integer LaurentPoly::coeff(long e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot -= c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.terms_[ea + eb] += ca * cb;
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e + k] = c;
  return out;
}

LaurentPoly LaurentPoly::inverted() const { return substitute_power(-1); }

LaurentPoly LaurentPoly::substitute_power(long k) const {
  if (k == 0) throw Error(ErrorCode::ValidationError, "substitution t -> t^0");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e * k] = c;
  return out;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_)
    if (e != 0) out.terms_[e - 1] = c * e;
  return out;
}

Rational LaurentPoly::eval(const Integer& x) const {
  if (x == 0) throw Error(ErrorCode::ValidationError, "Laurent polynomial evaluated at 0");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
    acc += e >= 0 ? Rational(c * power) : make_rational(c, power);
  }
  acc.canonicalize();
  return acc;
}

IntPoly LaurentPoly::polynomial_part() const {
  if (terms_.empty()) return {};
  const long lo = min_degree();
  std::vector<Integer> v(max_degree() - lo + 1, 0);
  for (const auto& [e, c] : terms_) v[e - lo] = c;
  return IntPoly(std::move(v));
}

std::string LaurentPoly::to_string(const char* var) const { return format_terms(terms_, var); }

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero Laurent polynomial");
  if (a.is_zero()) return {};
  const IntPoly q = divide_exact(a.polynomial_part(), b.polynomial_part());
  return LaurentPoly::from_int_poly(q, a.min_degree() - b.min_degree());
}

bool is_zero_at_root(const LaurentPoly& p, int m, int n) {
  if (n < 1) throw Error(ErrorCode::ValidationError, "root order must be positive");
  if (p.is_zero()) return true;
  const int r = ((m % n) + n) % n;
  const int d = n / std::gcd(r, n);
  const IntPoly part = p.polynomial_part();
  // Phi_d is irreducible of degree phi(d).
  if (euler_phi(d) > part.degree()) return false;
  return divmod_monic(part, cyclotomic(d)).second.is_zero();
}

}  // namespace covertor
