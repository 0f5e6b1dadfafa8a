#pragma once

#include <optional>
#include <string>

#include "covertor/covers.hpp"
#include "covertor/jones.hpp"
#include "covertor/notation.hpp"
#include "covertor/rational.hpp"
#include "covertor/seifert.hpp"

namespace covertor {

/// An externally sourced Froyshov invariant h(Sigma, s). The provenance text
/// is mandatory; these values are consumed, never computed.
struct FroyshovInput {
  Rational value;
  std::string provenance;
};

struct GaugeInputs {
  KnotPresentation presentation;
  int n = 2;
  Rational casson_base = 0;  // lambda(Y); 0 for knots in S^3
  std::optional<FroyshovInput> froyshov;
};

struct InvariantReport {
  Rational lambda_fo;
  Rational lambda_sw;
  std::optional<Rational> lefschetz;
  std::optional<Rational> l_n;
  bool concordance_invariant = false;
  SignatureProfile signatures;
  BranchedCoverReport cover;
  std::optional<JonesReport> jones;
  std::optional<FroyshovInput> froyshov;
};

/// n lambda(Y) + (1/8) sum_{m=1}^{n-1} sign_{m/n}(K), the part of the
/// Lefschetz number that does not involve h. Additive under connected sum.
Rational h_free_lefschetz_part(const SeifertMatrix& v, int n, const Rational& casson_base,
                               const PrecisionPolicy& policy = PrecisionPolicy::from_environment());

/// Furuta-Ohta invariant of the mapping torus of the covering translation.
Rational lambda_fo_mapping_torus(const GaugeInputs& in);
/// Seiberg-Witten invariant of the same mapping torus; always -lambda_FO.
Rational lambda_sw_mapping_torus(const GaugeInputs& in);
/// Lef(tau_*) on reduced monopole homology: lambda_FO - h(Sigma, s).
Rational monopole_lefschetz(const GaugeInputs& in);
/// L_n(K), the Lefschetz number for a prime-power cover of a knot in S^3.
Rational l_n_invariant(const GaugeInputs& in);

/// lambda(Sigma_2(K)) = -J'(-1)/12 + sign_{1/2}(K)/8 for det(K) = 1.
Rational casson_double_cover_mullins(const KnotPresentation& k);

/// Casson invariant of the Brieskorn sphere Sigma(n, q, r), which is the
/// n-fold branched cover of T(q, r): (1/8) sum_m sign_{m/n}(T(q, r)),
/// evaluated through the Milnor-fiber lattice count.
Rational brieskorn_casson(int n, int q, int r);

/// chi(HM_red(Sigma)) = lambda(Sigma) - h(Sigma) for integral homology spheres.
Rational chi_hm_red(const Rational& lambda, const Rational& h);

bool is_prime_power(int n);

InvariantReport invariant_report(const GaugeInputs& in, bool include_jones = false);

}  // namespace covertor
