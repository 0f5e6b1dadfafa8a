#include "covertor/signature.hpp"

#include <algorithm>
#include <map>
#include <cstdlib>
#include <numeric>
#include <string>

#include "bigfloat.hpp"
#include "covertor/error.hpp"

namespace covertor {

using detail::BigFloat;

PrecisionPolicy PrecisionPolicy::from_environment() {
  PrecisionPolicy policy;
  if (const char* env = std::getenv("COVERTOR_PRECISION")) {
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bits > 0) policy.start_bits = static_cast<int>(std::max(bits, 100L));
  }
  return policy;
}

int RootOfUnity::order() const {
  const int r = ((m % n) + n) % n;
  return n / std::gcd(r, n);
}

namespace {

using RealMatrix = std::vector<std::vector<BigFloat>>;

RealMatrix realify(const LaurentMatrix& h, RootOfUnity root, mpfr_prec_t bits) {
  const int size = h.rows();
  BigFloat two_pi(bits);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  mpfr_mul_ui(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);
  // omega^e = cos + i sin of 2 pi (m e mod n) / n, cached per residue.
  std::map<long, std::pair<BigFloat, BigFloat>> powers;
  auto power = [&](long e) -> const std::pair<BigFloat, BigFloat>& {
    const long k = ((static_cast<long>(root.m) * e) % root.n + root.n) % root.n;
    auto it = powers.find(k);
    if (it == powers.end()) {
      BigFloat angle = two_pi;
      mpfr_mul_si(angle.get(), angle.get(), k, MPFR_RNDN);
      mpfr_div_si(angle.get(), angle.get(), root.n, MPFR_RNDN);
      BigFloat s(bits), c(bits);
      mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
      it = powers.emplace(k, std::make_pair(std::move(c), std::move(s))).first;
    }
    return it->second;
  };

  RealMatrix r(2 * size, std::vector<BigFloat>(2 * size, BigFloat(bits)));
  BigFloat x(bits), y(bits), term(bits), coeff(bits);
  for (int j = 0; j < size; ++j) {
    for (int k = 0; k < size; ++k) {
      mpfr_set_zero(x.get(), 1);
      mpfr_set_zero(y.get(), 1);
      for (const auto& [e, c] : h(j, k).terms()) {
        const auto& [re, im] = power(e);
        mpfr_set_z(coeff.get(), c.get_mpz_t(), MPFR_RNDN);
        mpfr_mul(term.get(), coeff.get(), re.get(), MPFR_RNDN);
        x += term;
        mpfr_mul(term.get(), coeff.get(), im.get(), MPFR_RNDN);
        y += term;
      }
      // [[X, -Y], [Y, X]]
      r[j][k] = x;
      r[j + size][k + size] = x;
      r[j + size][k] = y;
      r[j][k + size] = -y;
    }
  }
  return r;
}

// Signature of a real symmetric matrix of known rank, or nullopt when some
// pivot cannot be separated from zero at this precision.
std::optional<int> congruence_signature(RealMatrix a, int rank, int margin_bits) {
  const int size = static_cast<int>(a.size());
  if (size == 0) return 0;
  const mpfr_prec_t bits = a[0][0].precision();

  BigFloat norm(bits);
  for (const auto& row : a)
    for (const auto& v : row)
      if (norm < v.abs()) norm = v.abs();
  BigFloat tol = norm;
  mpfr_mul_2si(tol.get(), tol.get(), -(static_cast<long>(bits) - margin_bits), MPFR_RNDN);

  BigFloat alpha(bits, 17);
  mpfr_sqrt(alpha.get(), alpha.get(), MPFR_RNDN);
  mpfr_add_ui(alpha.get(), alpha.get(), 1, MPFR_RNDN);
  mpfr_div_ui(alpha.get(), alpha.get(), 8, MPFR_RNDN);

  std::vector<int> active(size);
  std::iota(active.begin(), active.end(), 0);
  int signature = 0;
  int done = 0;
  BigFloat scratch(bits), mu0(bits), mu1(bits);

  while (done < rank) {
    int p = -1, pi = -1, pj = -1;
    mpfr_set_zero(mu0.get(), 1);
    mpfr_set_zero(mu1.get(), 1);
    for (std::size_t s = 0; s < active.size(); ++s) {
      const int i = active[s];
      if (mu0 < a[i][i].abs()) mu0 = a[i][i].abs(), p = i;
      for (std::size_t t = s + 1; t < active.size(); ++t) {
        const int j = active[t];
        if (mu1 < a[i][j].abs()) mu1 = a[i][j].abs(), pi = i, pj = j;
      }
    }
    if (mu0 <= tol && mu1 <= tol) return std::nullopt;

    if (alpha * mu1 <= mu0) {
      const BigFloat pivot = a[p][p];
      signature += pivot.sign();
      std::erase(active, p);
      for (std::size_t s = 0; s < active.size(); ++s) {
        const int i = active[s];
        const BigFloat f = a[i][p] / pivot;
        for (std::size_t t = s; t < active.size(); ++t) {
          const int j = active[t];
          mpfr_mul(scratch.get(), f.get(), a[p][j].get(), MPFR_RNDN);
          a[i][j] -= scratch;
          a[j][i] = a[i][j];
        }
      }
      done += 1;
    } else {
      if (rank - done < 2) return std::nullopt;
      const BigFloat e11 = a[pi][pi], e12 = a[pi][pj], e22 = a[pj][pj];
      const BigFloat det = e11 * e22 - e12 * e12;
      // det < 0: one eigenvalue of each sign, contributing nothing.
      if (det.sign() > 0) signature += 2 * e11.sign();
      std::erase(active, pi);
      std::erase(active, pj);
      // Rows of the block inverse applied to column vectors.
      for (std::size_t s = 0; s < active.size(); ++s) {
        const int i = active[s];
        // w = E^{-1} [a_i,pi ; a_i,pj]
        const BigFloat w1 = (e22 * a[i][pi] - e12 * a[i][pj]) / det;
        const BigFloat w2 = (e11 * a[i][pj] - e12 * a[i][pi]) / det;
        for (std::size_t t = s; t < active.size(); ++t) {
          const int j = active[t];
          scratch = w1 * a[pi][j] + w2 * a[pj][j];
          a[i][j] -= scratch;
          a[j][i] = a[i][j];
        }
      }
      done += 2;
    }
  }
  for (int i : active)
    for (int j : active)
      if (tol < a[i][j].abs()) return std::nullopt;
  return signature;
}

}  // namespace

SignatureResult certified_signature(const LaurentMatrix& h, RootOfUnity root, int nullity,
                                    const PrecisionPolicy& policy) {
  if (h.rows() != h.cols()) throw Error(ErrorCode::ValidationError, "signature of a non-square matrix");
  if (root.n < 1) throw Error(ErrorCode::ValidationError, "root order must be positive");
  const int size = h.rows();
  if (nullity < 0 || nullity > size) throw Error(ErrorCode::ValidationError, "nullity certificate out of range");

  int bits = policy.start_bits;
  for (int level = 0; level <= policy.max_escalations; ++level, bits *= 2) {
    const auto doubled =
        congruence_signature(realify(h, root, bits), 2 * (size - nullity), policy.tolerance_margin_bits);
    if (doubled) return {*doubled / 2, nullity, bits};
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "pivot below tolerance after " + std::to_string(policy.max_escalations) + " precision escalations");
}

SignatureResult hermitian_signature(const CycloMatrix& h, RootOfUnity root, const PrecisionPolicy& policy,
                                    std::optional<int> certified_nullity) {
  if (h.rows() != h.cols()) throw Error(ErrorCode::ValidationError, "signature of a non-square matrix");
  if (root.n < 1) throw Error(ErrorCode::ValidationError, "root order must be positive");
  const int size = h.rows();
  const int d = root.order();
  LaurentMatrix entries(size, size);
  for (int j = 0; j < size; ++j) {
    for (int k = 0; k < size; ++k) {
      if (h(j, k).conductor() != d) {
        throw Error(ErrorCode::ValidationError, "entry conductor " + std::to_string(h(j, k).conductor()) +
                                                    " does not match root order " + std::to_string(d));
      }
      if (k >= j && !(h(j, k) == h(k, j).conj())) {
        throw Error(ErrorCode::NotHermitian,
                    "entry (" + std::to_string(j) + "," + std::to_string(k) + ") is not conjugate to its transpose");
      }
      entries(j, k) = LaurentPoly::from_int_poly(IntPoly(h(j, k).coeffs()));
    }
  }
  // Entries are expressed in powers of zeta_d; omega = zeta_d when t -> omega.
  const int nullity = certified_nullity ? *certified_nullity : size - cyclotomic_rank(h);
  return certified_signature(entries, root, nullity, policy);
}

void release_thread_caches() { mpfr_free_cache2(MPFR_FREE_LOCAL_CACHE); }

}  // namespace covertor
