#include <doctest.h>

#include <Eigen/Dense>

#include <complex>
#include <random>

#include "covertor/cyclotomic.hpp"
#include "covertor/error.hpp"
#include "covertor/matrix.hpp"
#include "covertor/polynomial.hpp"
#include "covertor/rational.hpp"
#include "covertor/signature.hpp"
#include "oracles.hpp"

using namespace covertor;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ValidationError;
}

IntPoly poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), b.cols(), Integer(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

IntMatrix random_unimodular(std::mt19937_64& rng, int n) {
  IntMatrix u(n, n, Integer(0));
  for (int i = 0; i < n; ++i) u(i, i) = 1;
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-3, 3);
  for (int step = 0; step < 3 * n; ++step) {
    const int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int c = coef(rng);
    for (int k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

int float_rank(const IntMatrix& m) {
  Eigen::MatrixXd a(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).get_d();
  return static_cast<int>(Eigen::FullPivLU<Eigen::MatrixXd>(a).rank());
}

std::complex<double> embed(const CycloElt& x, int m, int n) {
  std::complex<double> acc = 0;
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    acc += x.coeffs()[k].get_d() * std::polar(1.0, 2.0 * M_PI * m * static_cast<double>(k) / n);
  }
  return acc;
}

std::pair<int, int> eigen_signature(const CycloMatrix& h, int m, int n) {
  const int s = h.rows();
  Eigen::MatrixXcd a(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) a(i, j) = embed(h(i, j), m, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
  const double tol = 1e-8 * std::max(1.0, a.norm());
  int sig = 0, nullity = 0;
  for (int i = 0; i < s; ++i) {
    const double e = solver.eigenvalues()(i);
    if (std::abs(e) < tol) ++nullity;
    else sig += e > 0 ? 1 : -1;
  }
  return {sig, nullity};
}

CycloElt random_cyclo(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> c(-2, 2), e(-d, d);
  LaurentPoly p;
  for (int k = 0; k < 3; ++k) p += LaurentPoly::monomial(c(rng), e(rng));
  return CycloElt::from_laurent(p, d);
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("+3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4/2 ") == -2);
  CHECK(parse_rational("\xE2\x88\x92" "1") == -1);
  CHECK(parse_rational("-0") == 0);
  CHECK(parse_rational("12/8").get_den() == 2);
}

TEST_CASE("rational parsing failures") {
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rational(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rational("abc"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rational("1.5"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rational("6/-1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { make_rational(1, 0); }) == ErrorCode::ValidationError);
}

TEST_CASE("make_rational canonicalizes signs and common factors") {
  const Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(make_rational(-8, 8)) == "-1");
  CHECK(is_integral(make_rational(-8, 8)));
  CHECK_FALSE(is_integral(make_rational(3, 8)));
  CHECK(make_rational(1, 2) + make_rational(-1, -2) == 1);
}

TEST_CASE("error codes map to exit statuses") {
  CHECK(exit_status(ErrorCode::ParseError) == 2);
  CHECK(exit_status(ErrorCode::BraidRequired) == 2);
  CHECK(exit_status(ErrorCode::NotRationalHomologySphere) == 3);
  CHECK(exit_status(ErrorCode::DetNotOne) == 3);
  CHECK(exit_status(ErrorCode::NotPrimePower) == 3);
  CHECK(exit_status(ErrorCode::MissingFroyshov) == 3);
  CHECK(exit_status(ErrorCode::PrecisionExhausted) == 4);
  CHECK(error_code_name(ErrorCode::NotAKnot) == "NotAKnot");
  CHECK(std::string(Error(ErrorCode::DetNotOne, "x").what()) == "DetNotOne: x");
}

TEST_CASE("integer polynomial arithmetic") {
  const IntPoly a = poly({1, 1});
  const IntPoly b = poly({-1, 1});
  CHECK(a * b == poly({-1, 0, 1}));
  CHECK(a + b == poly({0, 2}));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(poly({1, 2, 3}).eval(2) == 17);
  const auto [q, r] = divmod_monic(poly({5, 0, 0, 1}), poly({-2, 1}));
  CHECK(q == poly({4, 2, 1}));
  CHECK(r == poly({13}));
  CHECK(divide_exact(poly({-1, 0, 1}), a) == b);
  CHECK(code_of([&] { divide_exact(poly({1, 0, 1}), a); }) == ErrorCode::ValidationError);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly({-1, 1}));
  CHECK(cyclotomic(2) == poly({1, 1}));
  CHECK(cyclotomic(4) == poly({1, 0, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
  // The first cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
  const IntPoly p105 = cyclotomic(105);
  CHECK(p105.degree() == 48);
  CHECK(p105.coeff(7) == -2);
  CHECK(p105.coeff(41) == -2);
}

TEST_CASE("property: t^n - 1 is the product of Phi_d over d | n") {
  for (int n = 1; n <= 60; ++n) {
    IntPoly prod = poly({1});
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) {
        CHECK(cyclotomic(d).degree() == euler_phi(d));
        prod = prod * cyclotomic(d);
      }
    CHECK(prod == IntPoly::monomial(1, n) - poly({1}));
  }
}

TEST_CASE("resultants") {
  CHECK(resultant_abs(poly({1, 0, 1}), poly({-2, 1})) == 5);
  CHECK(resultant_abs(poly({-2, 1}), poly({1, 0, 1})) == 5);
  CHECK(resultant_abs(poly({3}), poly({1, 2, 1})) == 9);
  CHECK(resultant_abs(poly({1, 1}), poly({1, 2, 1})) == 0);
  // Res(Phi_2, Phi_4) = 2 and Res(Phi_3, Phi_6) = 4.
  CHECK(resultant_abs(cyclotomic(2), cyclotomic(4)) == 2);
  CHECK(resultant_abs(cyclotomic(3), cyclotomic(6)) == 4);
}

TEST_CASE("property: resultants are symmetric, multiplicative and match root evaluation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-4, 4);
  auto random_poly = [&](int deg) {
    std::vector<Integer> v;
    for (int i = 0; i < deg; ++i) v.emplace_back(c(rng));
    v.emplace_back(c(rng) == 0 ? 1 : 2);
    return IntPoly(v);
  };
  for (int trial = 0; trial < 60; ++trial) {
    const IntPoly f = random_poly(trial % 4 + 1), g = random_poly(trial % 3 + 1), h = random_poly(2);
    CHECK(resultant_abs(f, g) == resultant_abs(g, f));
    CHECK(resultant_abs(f * g, h) == resultant_abs(f, h) * resultant_abs(g, h));
    const int a = c(rng);
    const Integer expected = abs(g.eval(a));
    CHECK(resultant_abs(poly({-a, 1}), g) == expected);
  }
}

TEST_CASE("Laurent polynomial basics") {
  const LaurentPoly j{{1, 1}, {3, 1}, {4, -1}};
  CHECK(j.to_string() == "-t^4 + t^3 + t");
  CHECK(j.eval(1) == 1);
  CHECK(j.eval(-1) == -3);
  CHECK(j.inverted() == LaurentPoly({{-1, 1}, {-3, 1}, {-4, -1}}));
  CHECK(j.derivative() == LaurentPoly({{0, 1}, {2, 3}, {3, -4}}));
  CHECK(j.derivative().eval(-1) == 8);
  CHECK(j.substitute_power(2) == LaurentPoly({{2, 1}, {6, 1}, {8, -1}}));
  CHECK(j.shifted(-2).min_degree() == -1);
  const LaurentPoly f{{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}};
  CHECK(f.eval(-1) == 5);
  CHECK(f.eval(-2) == Rational(1, 4) + Rational(1, 2) + 1 + 2 + 4);
  CHECK(f.eval(2) == Rational(1, 4) - Rational(1, 2) + 1 - 2 + 4);
  CHECK(LaurentPoly::monomial(3, -3).eval(-3) == Rational(-1, 9));
  CHECK(divide_exact(f * j, j) == f);
  CHECK((f - f).is_zero());
}

TEST_CASE("zero test at roots of unity") {
  const LaurentPoly trefoil{{-1, 1}, {0, -1}, {1, 1}};
  CHECK(is_zero_at_root(trefoil, 1, 6));
  CHECK(is_zero_at_root(trefoil, 5, 6));
  CHECK(is_zero_at_root(trefoil, 2, 12));
  CHECK_FALSE(is_zero_at_root(trefoil, 1, 2));
  CHECK_FALSE(is_zero_at_root(trefoil, 1, 3));
  CHECK_FALSE(is_zero_at_root(trefoil, 1, 7));
  CHECK_FALSE(is_zero_at_root(LaurentPoly(1), 1, 5));
  CHECK(is_zero_at_root(LaurentPoly(), 1, 5));
}

TEST_CASE("determinants agree with cofactor expansion") {
  std::mt19937_64 rng(11);
  CHECK(determinant(IntMatrix()) == 1);
  CHECK(determinant(int_matrix({{2, 1}, {1, 1}})) == 1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    const IntMatrix m = random_matrix(rng, n, n, trial % 2 ? 2 : 9);
    CHECK(determinant(m) == oracle::naive_det(m));
  }
}

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form(int_matrix({{3}})).to_string() == "Z/3");
  CHECK(smith_normal_form(int_matrix({{2, 0}, {0, 3}})).to_string() == "Z/6");
  CHECK(smith_normal_form(int_matrix({{2, 0}, {0, 4}})).to_string() == "Z/2 + Z/4");
  CHECK(smith_normal_form(int_matrix({{2, 0}, {0, 0}})).to_string() == "Z/2 + Z");
  CHECK(smith_normal_form(int_matrix({{1, 0}, {0, 1}})).to_string() == "0");
  const AbelianGroupSNF g = smith_normal_form(int_matrix({{0, 0}, {0, 0}}));
  CHECK(g.free_rank == 2);
  CHECK(g.order() == 0);
  CHECK_FALSE(g.is_finite());
  CHECK(smith_normal_form(int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).to_string() == "Z/2 + Z/6 + Z/12");
}

TEST_CASE("property: Smith normal form invariants") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 6;
    const int r = 1 + (trial / 6) % n;
    IntMatrix m = multiply(random_matrix(rng, n, r, 4), random_matrix(rng, r, n, 4));
    const AbelianGroupSNF g = smith_normal_form(m);
    CHECK(g.free_rank == n - float_rank(m));
    for (std::size_t i = 0; i + 1 < g.factors.size(); ++i) CHECK(g.factors[i + 1] % g.factors[i] == 0);
    for (const Integer& f : g.factors) CHECK(f >= 2);
    if (g.free_rank == 0) CHECK(g.order() == abs(determinant(m)));
    const IntMatrix moved = multiply(multiply(random_unimodular(rng, n), m), random_unimodular(rng, n));
    CHECK(smith_normal_form(moved) == g);
  }
}

TEST_CASE("cyclotomic field arithmetic") {
  const int d = 6;
  const CycloElt t = CycloElt::from_laurent(LaurentPoly::monomial(1, 1), d);
  // zeta_6^2 = zeta_6 - 1.
  CHECK(t * t == t - CycloElt::from_integer(1, d));
  CHECK(CycloElt::from_laurent(LaurentPoly::monomial(1, 6), d) == CycloElt::from_integer(1, d));
  CHECK(t.conj() * t == CycloElt::from_integer(1, d));
  CHECK(CycloElt::from_laurent(LaurentPoly{{-1, 1}, {0, -1}, {1, 1}}, d).is_zero());
}

TEST_CASE("exact rank over cyclotomic fields") {
  const int d = 5;
  const CycloElt z = CycloElt::from_laurent(LaurentPoly::monomial(1, 1), d);
  const CycloElt one = CycloElt::from_integer(1, d);
  CycloMatrix m(2, 2, CycloElt(d));
  m(0, 0) = one;
  m(0, 1) = z;
  m(1, 0) = z.conj();
  m(1, 1) = one;
  CHECK(cyclotomic_rank(m) == 1);
  m(1, 1) = one + one;
  CHECK(cyclotomic_rank(m) == 2);
}

TEST_CASE("property: exact Hermitian signatures match floating-point eigenvalues") {
  std::mt19937_64 rng(13);
  const PrecisionPolicy policy;
  for (int trial = 0; trial < 80; ++trial) {
    const int d = 3 + trial % 10;
    const int s = 1 + trial % 5;
    const int r = 1 + (trial / 5) % s;
    CycloMatrix b(s, r, CycloElt(d));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < r; ++j) b(i, j) = random_cyclo(rng, d);
    std::vector<int> diag(r);
    std::uniform_int_distribution<int> dd(-2, 2);
    for (int& x : diag) x = dd(rng);
    // H = B D B^*, rank <= r.
    CycloMatrix h(s, s, CycloElt(d));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        for (int k = 0; k < r; ++k) h(i, j) = h(i, j) + b(i, k) * CycloElt::from_integer(diag[k], d) * b(j, k).conj();
    int m = 1;
    while (std::gcd(m, d) != 1) ++m;
    if (trial % 3 == 1) m = d - 1;
    const SignatureResult exact = hermitian_signature(h, {m, d}, policy);
    const auto [sig, nullity] = eigen_signature(h, m, d);
    CHECK(exact.signature == sig);
    CHECK(exact.nullity == nullity);
  }
}

TEST_CASE("Hermitian check, root mismatch and precision exhaustion") {
  const int d = 4;
  CycloMatrix h(1, 1, CycloElt::from_laurent(LaurentPoly::monomial(1, 1), d));
  CHECK(code_of([&] { hermitian_signature(h, {1, 4}, PrecisionPolicy{}); }) == ErrorCode::NotHermitian);

  CycloMatrix g(2, 2, CycloElt(d));
  g(0, 0) = CycloElt::from_integer(Integer(1) << 20, d);
  g(1, 1) = CycloElt::from_integer(-1, d);
  CHECK(code_of([&] { hermitian_signature(g, {1, 3}, PrecisionPolicy{}); }) == ErrorCode::ValidationError);
  CHECK(hermitian_signature(g, {1, 4}, PrecisionPolicy{}).signature == 0);
  // With a tolerance of 2^-12 relative to the norm, the unit pivot reads as zero.
  const PrecisionPolicy coarse{60, 48, 0};
  CHECK(code_of([&] { hermitian_signature(g, {1, 4}, coarse); }) == ErrorCode::PrecisionExhausted);
  const PrecisionPolicy escalating{60, 48, 1};
  const SignatureResult r = hermitian_signature(g, {1, 4}, escalating);
  CHECK(r.signature == 0);
  CHECK(r.precision_bits == 120);
}

TEST_CASE("precision override from the environment") {
  setenv("COVERTOR_PRECISION", "256", 1);
  CHECK(PrecisionPolicy::from_environment().start_bits == 256);
  setenv("COVERTOR_PRECISION", "40", 1);
  CHECK(PrecisionPolicy::from_environment().start_bits == 100);
  setenv("COVERTOR_PRECISION", "junk", 1);
  CHECK(PrecisionPolicy::from_environment().start_bits == 128);
  unsetenv("COVERTOR_PRECISION");
  CHECK(PrecisionPolicy::from_environment().start_bits == 128);
  CHECK(RootOfUnity{2, 12}.order() == 6);
  CHECK(RootOfUnity{5, 5}.order() == 1);
}

TEST_CASE("documented small examples") {
  CHECK(resultant_abs(poly({-2, 1}), poly({-3, 1})) == 1);
  CHECK(resultant_abs(poly({1, -1, 1}), poly({1, 1})) == 3);
  CHECK(resultant_abs(poly({1, -3, 1}), poly({1, 1})) == 5);
  CHECK(cyclotomic(5) == poly({1, 1, 1, 1, 1}));

  const AbelianGroupSNF a = smith_normal_form(int_matrix({{2, 0}, {0, 6}}));
  CHECK(a.factors == std::vector<Integer>{2, 6});
  CHECK(a.free_rank == 0);
  const AbelianGroupSNF b = smith_normal_form(int_matrix({{1, 2}, {3, 4}}));
  CHECK(b.factors == std::vector<Integer>{2});
  CHECK(b.free_rank == 0);

  const LaurentPoly p{{4, 1}, {6, 1}, {10, -1}};
  CHECK(p.derivative() == LaurentPoly{{3, 4}, {5, 6}, {9, -10}});
  CHECK(p.eval(-1) == 1);
  CHECK(p.derivative().eval(-1) == 0);
  CHECK(LaurentPoly(1).eval(-1) == 1);
  CHECK(LaurentPoly{{1, 1}, {0, -1}} * LaurentPoly{{1, 1}, {0, 1}} == LaurentPoly{{2, 1}, {0, -1}});
  CHECK_FALSE(is_zero_at_root(LaurentPoly{{-1, 1}, {0, -1}, {1, 1}}, 1, 5));
}

TEST_CASE("documented Hermitian signatures") {
  const PrecisionPolicy policy;
  CycloMatrix real(2, 2, CycloElt(2));
  real(0, 0) = CycloElt::from_integer(-2, 2);
  real(0, 1) = CycloElt::from_integer(1, 2);
  real(1, 0) = CycloElt::from_integer(1, 2);
  real(1, 1) = CycloElt::from_integer(-2, 2);
  CHECK(hermitian_signature(real, {1, 2}, policy) == SignatureResult{-2, 0, 0});

  const int d = 3;
  const CycloElt w = CycloElt::from_laurent(LaurentPoly::monomial(1, 1), d);
  const CycloElt one = CycloElt::from_integer(1, d);
  CycloMatrix h(2, 2, CycloElt(d));
  h(0, 0) = CycloElt::from_integer(-3, d);
  h(1, 1) = CycloElt::from_integer(-3, d);
  h(0, 1) = one - w;
  h(1, 0) = one - w.conj();
  CHECK(hermitian_signature(h, {1, 3}, policy) == SignatureResult{-2, 0, 0});

  CHECK(hermitian_signature(CycloMatrix(2, 2, CycloElt(d)), {1, 3}, policy) == SignatureResult{0, 2, 0});
}

TEST_CASE("property: Hermitian signature under negation and integer congruence") {
  std::mt19937_64 rng(14);
  const PrecisionPolicy policy;
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 9;
    const int s = 1 + trial % 4;
    CycloMatrix h(s, s, CycloElt(d));
    for (int i = 0; i < s; ++i) {
      h(i, i) = CycloElt::from_integer(static_cast<long>(rng() % 7) - 3, d);
      for (int j = i + 1; j < s; ++j) {
        h(i, j) = random_cyclo(rng, d);
        h(j, i) = h(i, j).conj();
      }
    }
    const SignatureResult r = hermitian_signature(h, {1, d}, policy);
    CHECK(std::abs(r.signature) + r.nullity <= s);
    CycloMatrix neg(s, s, CycloElt(d));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) neg(i, j) = -h(i, j);
    const SignatureResult rn = hermitian_signature(neg, {1, d}, policy);
    CHECK(rn.signature == -r.signature);
    CHECK(rn.nullity == r.nullity);

    const IntMatrix p = random_unimodular(rng, s);
    CycloMatrix c(s, s, CycloElt(d));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        for (int k = 0; k < s; ++k)
          for (int l = 0; l < s; ++l) {
            const Integer coef = p(k, i) * p(l, j);
            if (coef != 0) c(i, j) = c(i, j) + CycloElt::from_integer(coef, d) * h(k, l);
          }
    CHECK(hermitian_signature(c, {1, d}, policy) == r);
  }
}
