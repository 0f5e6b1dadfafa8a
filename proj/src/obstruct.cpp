#include "covertor/obstruct.hpp"

namespace covertor {

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::NotLSpaceAllEvenCovers: return "NotLSpaceAllEvenCovers";
    case VerdictKind::NotLSpaceThisCover: return "NotLSpaceThisCover";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

JonesCertificate jones_certificate(const KnotPresentation& k) {
  const JonesReport r = jones(k);
  return {r.det, r.jprime_at_minus_one};
}

Verdict jones_verdict(const JonesCertificate& cert) {
  Verdict v;
  v.certificate.jones = cert;
  if (cert.det == 1 && cert.jprime != 0) v.kind = VerdictKind::NotLSpaceAllEvenCovers;
  return v;
}

Verdict lefschetz_verdict(const GaugeInputs& in) {
  const Rational lef = monopole_lefschetz(in);  // enforces qhs and h provenance
  Verdict v;
  v.certificate.n = in.n;
  v.certificate.lefschetz = lef;
  v.certificate.froyshov = in.froyshov;
  v.certificate.qhs = true;
  v.certificate.concordance_invariant = is_prime_power(in.n) && in.casson_base == 0;
  if (lef != 0) v.kind = VerdictKind::NotLSpaceThisCover;
  return v;
}

}  // namespace covertor
