// Acceptance gate: one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "covertor/cli.hpp"
#include "covertor/covers.hpp"
#include "covertor/error.hpp"
#include "covertor/gauge.hpp"
#include "covertor/jones.hpp"
#include "covertor/obstruct.hpp"
#include "oracles.hpp"

using namespace covertor;

namespace {

struct Check {
  int failures = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

std::vector<cli::TableRow> corpus() {
  std::ifstream in(std::string(COVERTOR_DATA_DIR) + "/corpus.csv");
  return cli::ingest_csv(in).rows;
}

GaugeInputs inputs(const BraidWord& b, int n, std::optional<long> h = std::nullopt) {
  GaugeInputs in{KnotPresentation{b, {}}, n, 0, std::nullopt};
  if (h) in.froyshov = FroyshovInput{*h, "literature value"};
  return in;
}

bool coprime3(int a, int b, int c) { return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1; }

LaurentPoly jones_of(const BraidWord& b) { return jones(KnotPresentation{b, {}}).jones; }

template <class F>
bool throws_code(F&& f, ErrorCode code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

void unknot_normalization(Check& c) {
  for (int n = 2; n <= 5; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    c.expect(lambda_fo_mapping_torus(inputs(unknot_braid(), n)) == 0, "lambda_FO(unknot) != 0" + at);
    c.expect(lambda_sw_mapping_torus(inputs(unknot_braid(), n)) == 0, "lambda_SW(unknot) != 0" + at);
    c.expect(monopole_lefschetz(inputs(unknot_braid(), n, 0)) == 0, "Lef(unknot, h=0) != 0" + at);
  }
}

void brieskorn_routes(Check& c) {
  int triples = 0;
  for (int n = 2; n <= 105; ++n)
    for (int q = 2; n * q * 2 <= 210; ++q)
      for (int r = 2; n * q * r <= 210; ++r) {
        if (!coprime3(n, q, r)) continue;
        ++triples;
        const std::string t = "(" + std::to_string(n) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
        const Rational b = brieskorn_casson(n, q, r);
        const Rational sig = make_rational(tl_signature_sum(seifert_matrix(torus_braid(q, r)), n), 8);
        const Rational lattice = make_rational(oracle::milnor_count(q, r, n), 8);
        c.expect(b == sig, "brieskorn != signature route at " + t);
        c.expect(b == lattice, "brieskorn != lattice count at " + t);
        std::array<int, 3> p{n, q, r};
        std::sort(p.begin(), p.end());
        do {
          c.expect(brieskorn_casson(p[0], p[1], p[2]) == b, "permutation changes value at " + t);
        } while (std::next_permutation(p.begin(), p.end()));
      }
  c.expect(triples > 20, "too few triples enumerated");
}

void poincare_pin(Check& c) {
  c.expect(brieskorn_casson(2, 3, 5) == -1, "brieskorn_casson(2,3,5) != -1");
  const KnotPresentation t35{torus_braid(3, 5), {}};
  const JonesReport j = jones(t35);
  c.expect(j.jprime_at_minus_one == 0, "J'(-1) of T(3,5) != 0");
  c.expect(tl_signature(seifert_matrix(torus_braid(3, 5)), 1, 2).signature == -8, "sigma(T(3,5)) != -8");
  c.expect(casson_double_cover_mullins(t35) == -1, "Mullins route != -1");
  const LaurentPoly delta = alexander(seifert_matrix(BraidWord(2, {1, 1, 1})));
  c.expect(-delta.derivative().derivative().eval(1) / 2 == -1, "surgery formula != -1");
  c.expect(monopole_lefschetz(inputs(torus_braid(3, 5), 2, -1)) == 0, "Lef(T(3,5), n=2, h=-1) != 0");
}

void sigma237_pin(Check& c) {
  c.expect(brieskorn_casson(2, 3, 7) == -1, "brieskorn_casson(2,3,7) != -1");
  c.expect(monopole_lefschetz(inputs(torus_braid(3, 7), 2, 0)) == -1, "Lef(T(3,7), n=2, h=0) != -1");
  c.expect(lefschetz_verdict(inputs(torus_braid(3, 7), 2, 0)).kind == VerdictKind::NotLSpaceThisCover,
           "lefschetz_verdict(T(3,7)) is not NotLSpaceThisCover");
}

void fox_snf(Check& c, std::size_t rows) {
  const SeifertMatrix t = seifert_matrix(BraidWord(2, {1, 1, 1}));
  c.expect(branched_homology(t, 2).homology.to_string() == "Z/3", "H1(Sigma_2(trefoil)) != Z/3");
  c.expect(branched_homology(seifert_matrix(parse_braid("1 -2 1 -2")), 2).homology.to_string() == "Z/5",
           "H1(Sigma_2(fig-8)) != Z/5");
  c.expect(branched_homology(t, 3).order == 4, "|H1(Sigma_3(trefoil))| != 4");
  c.expect(!branched_homology(t, 6).qhs && branched_homology(t, 6).order == 0, "Sigma_6(trefoil) not infinite");
  c.expect(rows >= 25, "corpus has fewer than 25 knots");
  for (const cli::TableRow& row : corpus()) {
    const SeifertMatrix v = seifert_matrix(row.word);
    for (int n = 2; n <= 8; ++n) {
      c.expect(fox_order(v, n) == branched_homology(v, n).order,
               "fox_order != SNF order for " + row.name + " n=" + std::to_string(n));
    }
  }
}

void jones_suite(Check& c) {
  c.expect(jones_of(BraidWord(2, {1, 1, 1})) == LaurentPoly{{4, -1}, {3, 1}, {1, 1}}, "J(right trefoil)");
  c.expect(jones_of(parse_braid("1 -2 1 -2")) == LaurentPoly{{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}, "J(fig-8)");
  c.expect(jones_of(torus_braid(3, 5)) == LaurentPoly{{4, 1}, {6, 1}, {10, -1}}, "J(T(3,5))");
  const std::vector<cli::TableRow> rows = corpus();
  std::mt19937_64 rng(6);
  for (const cli::TableRow& row : rows) {
    const LaurentPoly j = jones_of(row.word);
    c.expect(jones_of(mirror(row.word)) == j.inverted(), "mirror symmetry fails for " + row.name);
    c.expect(abs(j.eval(-1)) == Rational(knot_determinant(seifert_matrix(row.word))),
             "|J(-1)| != |Delta(-1)| for " + row.name);
    std::vector<int> stab = row.word.letters();
    stab.push_back(row.word.strands());
    c.expect(jones_of(BraidWord(row.word.strands() + 1, stab)) == j, "Markov stabilization fails for " + row.name);
    const cli::TableRow& other = rows[rng() % rows.size()];
    const BraidWord sum = connected_sum(row.word, other.word);
    if (sum.length() <= 24) {
      c.expect(jones_of(sum) == j * jones_of(other.word), "multiplicativity fails for " + row.name + " # " + other.name);
    }
  }
}

void signature_suite(Check& c) {
  const std::vector<cli::TableRow> rows = corpus();
  for (const cli::TableRow& row : rows) {
    const SeifertMatrix v = seifert_matrix(row.word);
    const SeifertMatrix mv = seifert_matrix(mirror(row.word));
    const LaurentPoly delta = alexander(v);
    for (int n = 2; n <= 12; ++n)
      for (int m = 1; m < n; ++m) {
        const std::string at = row.name + " at " + std::to_string(m) + "/" + std::to_string(n);
        if (is_zero_at_root(delta, m, n)) {
          c.expect(throws_code([&] { tl_signature(v, m, n); }, ErrorCode::DegenerateAtRoot),
                   "no DegenerateAtRoot for " + at);
          continue;
        }
        const SignatureResult s = tl_signature(v, m, n);
        c.expect(s.nullity == 0, "nonzero nullity off the roots of Delta for " + at);
        c.expect(s.signature % 2 == 0, "odd signature for " + at);
        c.expect(tl_signature(v, n - m, n) == s, "conjugation symmetry fails for " + at);
        c.expect(tl_signature(mv, m, n).signature == -s.signature, "mirror antisymmetry fails for " + at);
      }
  }
  const SeifertMatrix t = seifert_matrix(BraidWord(2, {1, 1, 1}));
  c.expect(throws_code([&] { tl_signature(t, 1, 6); }, ErrorCode::DegenerateAtRoot), "trefoil 1/6 not degenerate");

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const cli::TableRow& x = rows[rng() % rows.size()];
    const cli::TableRow& y = rows[rng() % rows.size()];
    const std::string pair = x.name + " # " + y.name;
    const SeifertMatrix vx = seifert_matrix(x.word), vy = seifert_matrix(y.word);
    const SeifertMatrix vs = seifert_matrix(connected_sum(x.word, y.word));
    for (int n = 2; n <= 8; ++n) {
      for (int m = 1; m < n; ++m) {
        if (is_zero_at_root(alexander(vs), m, n)) continue;
        c.expect(tl_signature(vs, m, n).signature ==
                     tl_signature(vx, m, n).signature + tl_signature(vy, m, n).signature,
                 "signature additivity fails for " + pair);
      }
      if (is_prime_power(n)) {
        c.expect(h_free_lefschetz_part(vs, n, 0) == h_free_lefschetz_part(vx, n, 0) + h_free_lefschetz_part(vy, n, 0),
                 "s_n additivity fails for " + pair + " n=" + std::to_string(n));
      }
    }
  }
}

void verdict_logic(Check& c) {
  for (int det : {1, 3, 5})
    for (int jprime : {-8, 0, 8}) {
      const VerdictKind expected =
          det == 1 && jprime != 0 ? VerdictKind::NotLSpaceAllEvenCovers : VerdictKind::Inconclusive;
      c.expect(jones_verdict({det, jprime}).kind == expected,
               "rule table wrong at det=" + std::to_string(det) + " jprime=" + std::to_string(jprime));
    }
  const KnotPresentation t35{torus_braid(3, 5), {}};
  c.expect(jones_verdict(jones_certificate(t35)).kind == VerdictKind::Inconclusive, "Jones route fires on T(3,5)");
  c.expect(lefschetz_verdict(inputs(torus_braid(3, 5), 2, -1)).kind == VerdictKind::Inconclusive,
           "Lefschetz route fires on T(3,5)");
  c.expect(jones_verdict(jones_certificate(KnotPresentation{torus_braid(3, 7), {}})).kind == VerdictKind::Inconclusive,
           "Jones route fires on T(3,7)");
}

std::string batch_output(const std::string& path, const std::string& jobs, int& status, std::string& diag) {
  std::ostringstream out, err;
  status = cli::run({"batch", path, "--invariants", "det,tl-sum,homology", "--n", "2,3,4,5,6", "--jobs", jobs,
                     "--deterministic"},
                    out, err);
  diag = err.str();
  return out.str();
}

void batch_determinism(Check& c) {
  const std::string path = std::string(COVERTOR_DATA_DIR) + "/corpus.csv";
  int s1 = 0, s2 = 0, s3 = 0;
  std::string d;
  const std::string a = batch_output(path, "1", s1, d);
  const std::string b = batch_output(path, "1", s2, d);
  const std::string p = batch_output(path, "4", s3, d);
  c.expect(s1 == 0 && s2 == 0 && s3 == 0, "batch exit status nonzero");
  c.expect(!a.empty(), "batch produced no output");
  c.expect(a == b, "two sequential runs differ");
  c.expect(a == p, "jobs=1 and jobs=4 differ");
  bool trefoil_error = false;
  std::istringstream in(a);
  for (std::string line; std::getline(in, line);) {
    const auto r = nlohmann::json::parse(line);
    if (r["name"] == "3_1" && r["n"] == 6 && r.contains("error") &&
        r["error"]["code"] == "NotRationalHomologySphere")
      trefoil_error = true;
  }
  c.expect(trefoil_error, "no NotRationalHomologySphere record for the trefoil at n=6");
}

}  // namespace

int main() {
  const std::size_t rows = corpus().size();
  constexpr double kNoBudget = std::numeric_limits<double>::infinity();
  struct Criterion {
    const char* label;
    double budget_s;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria{
      {"unknot normalization", 1, unknot_normalization},
      {"Brieskorn triple-route agreement", 60, brieskorn_routes},
      {"Poincare sphere pin", kNoBudget, poincare_pin},
      {"Sigma(2,3,7) pin", kNoBudget, sigma237_pin},
      {"Fox/SNF double computation", 60, [&](Check& c) { fox_snf(c, rows); }},
      {"Jones suite", 120, jones_suite},
      {"signature property suite", kNoBudget, signature_suite},
      {"verdict logic", 1, verdict_logic},
      {"batch determinism", 120, batch_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < criteria[i].budget_s, "over time budget");
    const bool ok = c.failures == 0;
    failed += !ok;
    std::printf("%s criterion %zu: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].label, secs,
                ok ? "" : " - ", ok ? "" : c.first.c_str());
  }
  return failed == 0 ? 0 : 1;
}
