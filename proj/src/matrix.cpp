#include "covertor/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace covertor {

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.front().size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rows[i].at(j);
  return m;
}

Integer determinant(IntMatrix m) {
  const int n = m.rows();
  if (n != m.cols()) return 0;
  if (n == 0) return 1;
  int sign = 1;
  Integer previous = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer AbelianGroupSNF::order() const {
  if (free_rank > 0) return 0;
  Integer product = 1;
  for (const auto& d : factors) product *= d;
  return product;
}

std::string AbelianGroupSNF::to_string() const {
  std::string out;
  auto append = [&](const std::string& term) { out += (out.empty() ? "" : " + ") + term; };
  for (const auto& d : factors) append("Z/" + d.get_str());
  for (int i = 0; i < free_rank; ++i) append("Z");
  return out.empty() ? "0" : out;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

namespace {

struct RankMinor {
  int rank = 0;
  Integer minor = 1;  // a nonzero rank x rank minor
};

// Fraction-free elimination with full pivoting. After k steps the current
// pivot equals, up to sign, a k x k minor of the original matrix.
RankMinor rank_and_minor(IntMatrix m) {
  RankMinor out;
  Integer previous = 1;
  const int rows = m.rows(), cols = m.cols();
  for (int k = 0; k < std::min(rows, cols); ++k) {
    int pr = -1, pc = -1;
    for (int i = k; i < rows && pr < 0; ++i)
      for (int j = k; j < cols; ++j)
        if (m(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    swap_rows(m, k, pr);
    swap_cols(m, k, pc);
    for (int i = k + 1; i < rows; ++i) {
      for (int j = k + 1; j < cols; ++j) {
        m(i, j) = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m(k, k);
    out.rank = k + 1;
    out.minor = abs(previous);
  }
  return out;
}

// Symmetric residue in (-n/2, n/2].
void reduce_mod(Integer& x, const Integer& n, const Integer& half) {
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  if (x > half) x -= n;
}

}  // namespace

// The column lattice L of m together with N Z^rows, N = 2 |minor|, has
// cokernel (Z/N)^{free rank} + T: every torsion factor divides the minor, so
// it is a proper divisor of N. All entries can therefore be kept reduced
// modulo N, which bounds their size throughout the diagonalization.
AbelianGroupSNF smith_normal_form(IntMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  const RankMinor rm = rank_and_minor(m);
  const Integer modulus = 2 * rm.minor;
  const Integer half = rm.minor;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) reduce_mod(m(i, j), modulus, half);

  std::vector<Integer> diagonal(rows, Integer(0));
  Integer q;
  for (int s = 0; s < std::min(rows, cols); ++s) {
    int pr = -1, pc = -1;
    for (int i = s; i < rows; ++i)
      for (int j = s; j < cols; ++j) {
        if (m(i, j) == 0) continue;
        if (pr < 0 || mpz_cmpabs(m(i, j).get_mpz_t(), m(pr, pc).get_mpz_t()) < 0) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    swap_rows(m, s, pr);
    swap_cols(m, s, pc);

    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int i = s + 1; i < rows; ++i) {
        if (m(i, s) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(i, s).get_mpz_t(), m(s, s).get_mpz_t());
        for (int j = s; j < cols; ++j) {
          m(i, j) -= q * m(s, j);
          reduce_mod(m(i, j), modulus, half);
        }
        if (m(i, s) != 0) {
          swap_rows(m, s, i);
          dirty = true;
        }
      }
      for (int j = s + 1; j < cols; ++j) {
        if (m(s, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(s, j).get_mpz_t(), m(s, s).get_mpz_t());
        for (int i = s; i < rows; ++i) {
          m(i, j) -= q * m(i, s);
          reduce_mod(m(i, j), modulus, half);
        }
        if (m(s, j) != 0) {
          swap_cols(m, s, j);
          dirty = true;
        }
      }
    }
    diagonal[s] = m(s, s);
  }

  // Z^rows / (diag + N Z^rows) = sum of Z/gcd(d_i, N); sort into a divisor chain.
  for (Integer& d : diagonal) d = gcd(d, modulus);
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      const Integer g = gcd(diagonal[i], diagonal[j]);
      const Integer l = diagonal[i] / g * diagonal[j];
      diagonal[i] = g;
      diagonal[j] = l;
    }

  AbelianGroupSNF g;
  for (const Integer& d : diagonal) {
    if (d == modulus) ++g.free_rank;
    else if (d != 1) g.factors.push_back(d);
  }
  if (g.free_rank != rows - rm.rank) {
    throw std::logic_error("smith_normal_form: free rank " + std::to_string(g.free_rank) + " disagrees with rank " +
                           std::to_string(rm.rank));
  }
  return g;
}

}  // namespace covertor
