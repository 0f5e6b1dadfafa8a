#include "covertor/cyclotomic.hpp"

#include <utility>

#include "covertor/error.hpp"

namespace covertor {

CycloElt::CycloElt(int conductor)
    : conductor_(conductor),
      modulus_(std::make_shared<const IntPoly>(cyclotomic(conductor))),
      coeffs_(euler_phi(conductor), 0) {}

CycloElt::CycloElt(int conductor, std::shared_ptr<const IntPoly> modulus, const IntPoly& unreduced)
    : conductor_(conductor), modulus_(std::move(modulus)) {
  const IntPoly r = divmod_monic(unreduced, *modulus_).second;
  coeffs_.assign(modulus_->degree(), 0);
  for (int i = 0; i <= r.degree(); ++i) coeffs_[i] = r.coeff(i);
}

CycloElt CycloElt::from_laurent(const LaurentPoly& p, int conductor) {
  if (conductor < 1) throw Error(ErrorCode::ValidationError, "conductor must be positive");
  std::vector<Integer> v(conductor, 0);
  for (const auto& [e, c] : p.terms()) v[((e % conductor) + conductor) % conductor] += c;
  return CycloElt(conductor, std::make_shared<const IntPoly>(cyclotomic(conductor)), IntPoly(std::move(v)));
}

CycloElt CycloElt::from_integer(const Integer& c, int conductor) {
  return from_laurent(LaurentPoly::monomial(c, 0), conductor);
}

bool CycloElt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

CycloElt CycloElt::conj() const {
  std::vector<Integer> v(conductor_, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[(conductor_ - static_cast<int>(i)) % conductor_] += coeffs_[i];
  return CycloElt(conductor_, modulus_, IntPoly(std::move(v)));
}

CycloElt CycloElt::operator-() const {
  CycloElt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

void require_same_field(const CycloElt& a, const CycloElt& b) {
  if (a.conductor() != b.conductor()) throw Error(ErrorCode::ValidationError, "cyclotomic conductors differ");
}

}  // namespace

CycloElt operator+(const CycloElt& a, const CycloElt& b) {
  require_same_field(a, b);
  CycloElt r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

CycloElt operator-(const CycloElt& a, const CycloElt& b) { return a + (-b); }

CycloElt operator*(const CycloElt& a, const CycloElt& b) {
  require_same_field(a, b);
  return CycloElt(a.conductor_, a.modulus_, IntPoly(a.coeffs_) * IntPoly(b.coeffs_));
}

// --- exact rank over Q(zeta_d) ---------------------------------------------

namespace {

using QPoly = std::vector<Rational>;  // low degree first, trimmed

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

class CycloField {
 public:
  explicit CycloField(int d) {
    const IntPoly phi = cyclotomic(d);
    for (const auto& c : phi.coeffs()) modulus_.emplace_back(c);
  }

  QPoly reduce(const QPoly& p) const { return divmod(p, modulus_).second; }
  QPoly mul(const QPoly& a, const QPoly& b) const { return reduce(covertor::mul(a, b)); }

  QPoly inverse(const QPoly& a) const {
    // Extended Euclid: s * a + t * modulus = gcd, a unit since modulus is irreducible.
    QPoly r0 = modulus_, r1 = a, s0, s1{Rational(1)};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      QPoly s = sub(s0, covertor::mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r0.size() != 1) throw Error(ErrorCode::ValidationError, "non-invertible cyclotomic element");
    const Rational c = r0[0];
    for (auto& x : s0) x /= c;
    return reduce(s0);
  }

 private:
  QPoly modulus_;
};

}  // namespace

int cyclotomic_rank(const CycloMatrix& m) {
  if (m.empty()) return 0;
  const int d = m(0, 0).conductor();
  const CycloField field(d);
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<QPoly>> a(rows, std::vector<QPoly>(cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (m(i, j).conductor() != d) throw Error(ErrorCode::ValidationError, "mixed cyclotomic conductors");
      for (const auto& c : m(i, j).coeffs()) a[i][j].emplace_back(c);
      trim(a[i][j]);
    }
  }
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (!a[i][col].empty()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    const QPoly inv = field.inverse(a[rank][col]);
    for (int i = rank + 1; i < rows; ++i) {
      if (a[i][col].empty()) continue;
      const QPoly factor = field.mul(a[i][col], inv);
      for (int j = col; j < cols; ++j) {
        if (a[rank][j].empty()) continue;
        a[i][j] = sub(a[i][j], field.mul(factor, a[rank][j]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace covertor
