#include "covertor/gauge.hpp"

#include <numeric>

#include "covertor/error.hpp"

namespace covertor {

namespace {

void require_cover_degree(int n) {
  if (n < 2) throw Error(ErrorCode::ValidationError, "cover degree must be >= 2, got " + std::to_string(n));
}

const FroyshovInput& require_froyshov(const GaugeInputs& in) {
  if (!in.froyshov) throw Error(ErrorCode::MissingFroyshov, "h(Sigma, s) must be supplied");
  if (in.froyshov->provenance.empty()) {
    throw Error(ErrorCode::MissingFroyshov, "h(Sigma, s) supplied without provenance");
  }
  return *in.froyshov;
}

SeifertMatrix seifert_for_cover(const GaugeInputs& in) {
  require_cover_degree(in.n);
  SeifertMatrix v = seifert_matrix(in.presentation.braid());
  if (!is_qhs(v, in.n)) {
    throw Error(ErrorCode::NotRationalHomologySphere,
                "the " + std::to_string(in.n) + "-fold branched cover has infinite first homology");
  }
  return v;
}

}  // namespace

Rational h_free_lefschetz_part(const SeifertMatrix& v, int n, const Rational& casson_base,
                               const PrecisionPolicy& policy) {
  return Rational(n) * casson_base + make_rational(tl_signature_sum(v, n, policy), 8);
}

Rational lambda_fo_mapping_torus(const GaugeInputs& in) {
  return h_free_lefschetz_part(seifert_for_cover(in), in.n, in.casson_base);
}

Rational lambda_sw_mapping_torus(const GaugeInputs& in) { return -lambda_fo_mapping_torus(in); }

Rational monopole_lefschetz(const GaugeInputs& in) {
  const FroyshovInput& h = require_froyshov(in);
  return lambda_fo_mapping_torus(in) - h.value;
}

bool is_prime_power(int n) {
  if (n < 2) return false;
  int p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

Rational l_n_invariant(const GaugeInputs& in) {
  require_cover_degree(in.n);
  if (!is_prime_power(in.n)) throw Error(ErrorCode::NotPrimePower, std::to_string(in.n) + " is not a prime power");
  if (in.casson_base != 0) throw Error(ErrorCode::ValidationError, "L_n is defined for knots in S^3");
  return monopole_lefschetz(in);
}

Rational casson_double_cover_mullins(const KnotPresentation& k) {
  const SeifertMatrix v = seifert_matrix(k.braid());
  const JonesReport j = jones(k);
  if (j.det != 1) {
    throw Error(ErrorCode::DetNotOne, "det(K) = " + j.det.get_str() + "; the double branched cover is not an integral homology sphere");
  }
  const int sigma = tl_signature(v, 1, 2).signature;
  return make_rational(-j.jprime_at_minus_one, 12) + make_rational(sigma, 8);
}

Rational brieskorn_casson(int n, int q, int r) {
  if (n < 2 || q < 2 || r < 2) throw Error(ErrorCode::ValidationError, "Brieskorn exponents must be >= 2");
  if (std::gcd(n, q) != 1 || std::gcd(n, r) != 1 || std::gcd(q, r) != 1) {
    throw Error(ErrorCode::NotPairwiseCoprime, "(" + std::to_string(n) + "," + std::to_string(q) + "," +
                                                   std::to_string(r) + ") are not pairwise coprime");
  }
  const Rational value = make_rational(milnor_fiber_signature_oracle(q, r, n), 8);
  if (!is_integral(value)) throw Error(ErrorCode::ValidationError, "non-integral Casson invariant " + to_string(value));
  return value;
}

Rational chi_hm_red(const Rational& lambda, const Rational& h) { return lambda - h; }

InvariantReport invariant_report(const GaugeInputs& in, bool include_jones) {
  const SeifertMatrix v = seifert_for_cover(in);
  InvariantReport report;
  report.cover = branched_homology(v, in.n);
  report.signatures = signature_profile(v, in.n);
  report.lambda_fo = Rational(in.n) * in.casson_base + make_rational(report.signatures.sum, 8);
  report.lambda_sw = -report.lambda_fo;
  if (in.froyshov) {
    const FroyshovInput& h = require_froyshov(in);
    report.froyshov = h;
    report.lefschetz = report.lambda_fo - h.value;
    if (is_prime_power(in.n) && in.casson_base == 0) {
      report.l_n = report.lefschetz;
      report.concordance_invariant = true;
    }
  }
  if (include_jones) report.jones = jones(in.presentation);
  return report;
}

}  // namespace covertor
