#include "covertor/seifert.hpp"

#include <cstdint>
#include <cstdlib>

#include "covertor/cyclotomic.hpp"
#include "covertor/error.hpp"

namespace covertor {

// --- construction ----------------------------------------------------------

SeifertMatrix::SeifertMatrix(IntMatrix v, std::optional<BraidWord> source)
    : v_(std::move(v)), source_(std::move(source)) {
  if (v_.rows() != v_.cols() || v_.rows() % 2 != 0) {
    throw Error(ErrorCode::ValidationError, "Seifert matrix must be square of even size");
  }
  IntMatrix form(v_.rows(), v_.cols());
  for (int i = 0; i < v_.rows(); ++i)
    for (int j = 0; j < v_.cols(); ++j) form(i, j) = v_(i, j) - v_(j, i);
  const Integer det = determinant(std::move(form));
  if (det != 1) throw Error(ErrorCode::ValidationError, "det(V - V^T) = " + det.get_str() + ", expected 1");
}

SeifertMatrix seifert_matrix(const BraidWord& b) {
  if (!is_knot(b)) {
    throw Error(ErrorCode::NotAKnot, "braid closure has " + std::to_string(closure_components(b)) + " components");
  }
  const auto& x = b.letters();
  const int length = static_cast<int>(x.size());
  if (length < 2) return SeifertMatrix(IntMatrix(0, 0), b);

  // next[i]: position of the next letter with the same generator index, or 0.
  const int slots = length - 1;
  std::vector<int> next(slots, 0);
  for (int i = 0; i < slots; ++i) {
    for (int j = i + 1; j < length; ++j) {
      if (std::abs(x[j]) == std::abs(x[i])) {
        next[i] = j;
        break;
      }
    }
  }
  std::vector<int> generators;
  for (int i = 0; i < slots; ++i)
    if (next[i]) generators.push_back(i);

  auto sign = [](int v) { return (v > 0) - (v < 0); };
  std::vector<std::vector<int>> a(slots, std::vector<int>(slots, 0));
  for (int i : generators) {
    const int ni = next[i];
    a[i][i] = -sign(sign(x[i]) + sign(x[ni]));
    for (int j = i + 1; j < slots; ++j) {
      if (ni > next[j] || ni < j) continue;  // disjoint or nested bands do not link
      if (ni == j) {
        if (x[j] > 0) {
          a[i][j] = 1;
        } else {
          a[j][i] = -1;
        }
        continue;
      }
      const int di = std::abs(x[i]);
      const int dj = std::abs(x[j]);
      if (di - dj == 1) {
        a[j][i] = -1;
      } else if (dj - di == 1) {
        a[i][j] = 1;
      }
    }
  }

  const int g2 = static_cast<int>(generators.size());
  IntMatrix v(g2, g2);
  for (int r = 0; r < g2; ++r)
    for (int c = 0; c < g2; ++c) v(r, c) = a[generators[r]][generators[c]];
  return SeifertMatrix(std::move(v), b);
}

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  const int na = a.size(), nb = b.size();
  IntMatrix v(na + nb, na + nb, Integer(0));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) v(i, j) = a.matrix()(i, j);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) v(na + i, na + j) = b.matrix()(i, j);
  return SeifertMatrix(std::move(v));
}

// --- Alexander polynomial ----------------------------------------------------
//
// det(V - tV^T) = det(C) det(I - (t-1) M) with C = V - V^T unimodular and
// M = C^{-1} V^T. The characteristic polynomial of M is computed modulo
// 62-bit primes through a Hessenberg reduction and lifted by CRT past a
// Hadamard-style coefficient bound.

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 base, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, base = mulmod(base, base, p))
    if (e & 1) r = mulmod(r, base, p);
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce(const Integer& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

using ModMatrix = std::vector<std::vector<u64>>;

// Coefficients (low first) of det(V - tV^T) mod p.
std::vector<u64> alexander_mod(const IntMatrix& v, u64 p) {
  const int n = v.rows();
  ModMatrix aug(n, std::vector<u64>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      aug[i][j] = reduce(v(i, j) - v(j, i), p);
      aug[i][n + j] = reduce(v(j, i), p);
    }
  }
  // Gauss-Jordan: [C | V^T] -> [I | M].
  u64 det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::ValidationError, "V - V^T singular modulo a prime");
    if (pivot != col) {
      std::swap(aug[pivot], aug[col]);
      det = submod(0, det, p);
    }
    det = mulmod(det, aug[col][col], p);
    const u64 inv = invmod(aug[col][col], p);
    for (auto& e : aug[col]) e = mulmod(e, inv, p);
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const u64 f = aug[r][col];
      for (int c = 0; c < 2 * n; ++c) aug[r][c] = submod(aug[r][c], mulmod(f, aug[col][c], p), p);
    }
  }
  ModMatrix h(n, std::vector<u64>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h[i][j] = aug[i][n + j];

  // Upper Hessenberg form by similarity.
  for (int j = 0; j + 2 < n; ++j) {
    int i = j + 1;
    while (i < n && h[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (int r = 0; r < n; ++r) std::swap(h[r][i], h[r][j + 1]);
    }
    const u64 inv = invmod(h[j + 1][j], p);
    for (int r = j + 2; r < n; ++r) {
      const u64 u = mulmod(h[r][j], inv, p);
      if (u == 0) continue;
      for (int c = 0; c < n; ++c) h[r][c] = submod(h[r][c], mulmod(u, h[j + 1][c], p), p);
      for (int c = 0; c < n; ++c) h[c][j + 1] = addmod(h[c][j + 1], mulmod(u, h[c][r], p), p);
    }
  }

  // Characteristic polynomial by the Hessenberg recurrence.
  std::vector<std::vector<u64>> chi(n + 1);
  chi[0] = {1};
  for (int k = 1; k <= n; ++k) {
    std::vector<u64> next(k + 1, 0);
    const u64 hkk = h[k - 1][k - 1];
    for (int d = 0; d < k; ++d) {
      next[d + 1] = addmod(next[d + 1], chi[k - 1][d], p);
      next[d] = submod(next[d], mulmod(hkk, chi[k - 1][d], p), p);
    }
    u64 t = 1;
    for (int i = k - 1; i >= 1; --i) {
      t = mulmod(t, h[i][i - 1], p);
      const u64 f = mulmod(t, h[i - 1][k - 1], p);
      if (f == 0) continue;
      for (int d = 0; d < static_cast<int>(chi[i - 1].size()); ++d) {
        next[d] = submod(next[d], mulmod(f, chi[i - 1][d], p), p);
      }
    }
    chi[k] = std::move(next);
  }

  // det(I - sM) = sum_k chi_k s^{n-k}; then s = t - 1 by Horner.
  std::vector<u64> q{0};
  for (int j = n; j >= 0; --j) {
    // q <- q * (t - 1) + chi_{n-j}
    std::vector<u64> shifted(q.size() + 1, 0);
    for (std::size_t d = 0; d < q.size(); ++d) {
      shifted[d + 1] = addmod(shifted[d + 1], q[d], p);
      shifted[d] = submod(shifted[d], q[d], p);
    }
    shifted[0] = addmod(shifted[0], chi[n][n - j], p);
    q = std::move(shifted);
  }
  q.resize(n + 1);
  for (auto& c : q) c = mulmod(c, det, p);
  return q;
}

}  // namespace

IntPoly alexander_numerator(const SeifertMatrix& sm) {
  const IntMatrix& v = sm.matrix();
  const int n = v.rows();
  if (n == 0) return IntPoly({1});

  // |coeff| <= prod_i sum_j (|V_ij| + |V_ji|)
  Integer bound = 1;
  for (int i = 0; i < n; ++i) {
    Integer row = 0;
    for (int j = 0; j < n; ++j) row += abs(v(i, j)) + abs(v(j, i));
    bound *= row;
  }
  const Integer needed = 2 * bound + 1;

  std::vector<Integer> value(n + 1, 0);
  Integer modulus = 1;
  Integer prime = Integer(1) << 62;
  while (modulus <= needed) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u64 p = prime.get_ui();
    const auto residues = alexander_mod(v, p);
    const u64 minv = invmod(reduce(modulus, p), p);
    for (int d = 0; d <= n; ++d) {
      const u64 delta = mulmod(submod(residues[d], reduce(value[d], p), p), minv, p);
      value[d] += modulus * Integer(static_cast<unsigned long>(delta));
    }
    modulus *= prime;
  }
  const Integer half = modulus / 2;
  for (auto& c : value)
    if (c > half) c -= modulus;
  return IntPoly(std::move(value));
}

LaurentPoly alexander(const SeifertMatrix& v) {
  const LaurentPoly delta = LaurentPoly::from_int_poly(alexander_numerator(v), -v.genus());
  if (delta.eval(1) != 1 || !(delta.inverted() == delta)) {
    throw Error(ErrorCode::ValidationError, "Alexander polynomial failed normalization: " + delta.to_string());
  }
  return delta;
}

Integer knot_determinant(const SeifertMatrix& sm) {
  const IntMatrix& v = sm.matrix();
  IntMatrix sym(v.rows(), v.cols());
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j) sym(i, j) = v(i, j) + v(j, i);
  return abs(determinant(std::move(sym)));
}

// --- signatures --------------------------------------------------------------

namespace {

LaurentMatrix tristram_levine_form(const SeifertMatrix& sm) {
  const IntMatrix& v = sm.matrix();
  const int n = v.rows();
  const LaurentPoly one_minus_t = LaurentPoly{{0, 1}, {1, -1}};
  const LaurentPoly one_minus_tinv = LaurentPoly{{0, 1}, {-1, -1}};
  LaurentMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h(i, j) = one_minus_t * LaurentPoly::monomial(v(i, j), 0) + one_minus_tinv * LaurentPoly::monomial(v(j, i), 0);
  return h;
}

void check_fraction(int m, int n) {
  if (n < 2 || m <= 0 || m >= n) {
    throw Error(ErrorCode::ValidationError, "need 0 < m < n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
}

constexpr int kMaxRefinements = 8;

}  // namespace

SignatureResult tl_signature(const SeifertMatrix& v, int m, int n, SignatureMode mode, const PrecisionPolicy& policy) {
  check_fraction(m, n);
  if (v.size() == 0) return {0, 0, policy.start_bits};
  const LaurentPoly delta = alexander(v);
  const LaurentMatrix h = tristram_levine_form(v);
  if (!is_zero_at_root(delta, m, n)) return certified_signature(h, {m, n}, 0, policy);
  if (mode == SignatureMode::Strict) {
    throw Error(ErrorCode::DegenerateAtRoot, "Alexander polynomial vanishes at exp(2 pi i " + std::to_string(m) + "/" +
                                                 std::to_string(n) + ")");
  }

  // Exact nullity at the degenerate root. Rank over Q(zeta_d) does not depend
  // on which primitive d-th root t is sent to.
  const int d = RootOfUnity{m, n}.order();
  CycloMatrix exact(v.size(), v.size());
  for (int i = 0; i < v.size(); ++i)
    for (int j = 0; j < v.size(); ++j) exact(i, j) = CycloElt::from_laurent(h(i, j), d);
  const int nullity = v.size() - cyclotomic_rank(exact);

  std::optional<std::pair<int, int>> previous;
  for (int j = 1; j <= kMaxRefinements; ++j) {
    const int scale = 1 << j;
    const int nn = n * scale;
    const int above = m * scale + 1;
    const int below = m * scale - 1;
    if (is_zero_at_root(delta, above, nn) || is_zero_at_root(delta, below, nn)) {
      previous.reset();
      continue;
    }
    const std::pair<int, int> sides{certified_signature(h, {above, nn}, 0, policy).signature,
                                    certified_signature(h, {below, nn}, 0, policy).signature};
    if (previous && *previous == sides) return {(sides.first + sides.second) / 2, nullity, policy.start_bits};
    previous = sides;
  }
  throw Error(ErrorCode::PrecisionExhausted, "one-sided signature limits did not stabilize");
}

SignatureProfile signature_profile(const SeifertMatrix& v, int n, const PrecisionPolicy& policy) {
  if (n < 2) throw Error(ErrorCode::ValidationError, "cover degree must be >= 2");
  SignatureProfile profile;
  profile.n = n;
  if (v.size() == 0) {
    for (int m = 1; m < n; ++m) profile.values[m] = 0, profile.nullities[m] = 0;
    return profile;
  }
  const LaurentPoly delta = alexander(v);
  for (int m = 1; m < n; ++m) {
    if (is_zero_at_root(delta, m, n)) {
      throw Error(ErrorCode::NotRationalHomologySphere,
                  "Alexander polynomial vanishes at exp(2 pi i " + std::to_string(m) + "/" + std::to_string(n) +
                      "), so the " + std::to_string(n) + "-fold branched cover has positive first Betti number");
    }
  }
  const LaurentMatrix h = tristram_levine_form(v);
  for (int m = 1; m < n; ++m) {
    const auto r = certified_signature(h, {m, n}, 0, policy);
    profile.values[m] = r.signature;
    profile.nullities[m] = r.nullity;
    profile.sum += r.signature;
  }
  return profile;
}

long tl_signature_sum(const SeifertMatrix& v, int n, const PrecisionPolicy& policy) {
  return signature_profile(v, n, policy).sum;
}

long milnor_fiber_signature_oracle(int p, int q, int n) {
  if (p < 2 || q < 2 || n < 2) throw Error(ErrorCode::ValidationError, "Brieskorn exponents must be >= 2");
  const long long l = static_cast<long long>(p) * q * n;
  long positive = 0, negative = 0;
  for (long long i = 1; i < p; ++i)
    for (long long j = 1; j < q; ++j)
      for (long long k = 1; k < n; ++k) {
        const long long r = (i * q * n + j * p * n + k * p * q) % (2 * l);
        if (r == 0 || r == l) continue;
        (r < l ? positive : negative) += 1;
      }
  return positive - negative;
}

}  // namespace covertor
