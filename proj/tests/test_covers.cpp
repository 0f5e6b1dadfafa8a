#include <doctest.h>

#include <fstream>
#include <random>

#include "covertor/cli.hpp"
#include "covertor/covers.hpp"
#include "covertor/gauge.hpp"
#include "oracles.hpp"

using namespace covertor;

namespace {

SeifertMatrix sm(const std::string& braid) { return seifert_matrix(parse_braid(braid)); }

std::vector<cli::TableRow> corpus() {
  std::ifstream in(std::string(COVERTOR_DATA_DIR) + "/corpus.csv");
  REQUIRE(in);
  return cli::ingest_csv(in).rows;
}

}  // namespace

TEST_CASE("branched cover homology of small knots") {
  const SeifertMatrix t = sm("1 1 1");
  const BranchedCoverReport t2 = branched_homology(t, 2);
  CHECK(t2.n == 2);
  CHECK(t2.homology.to_string() == "Z/3");
  CHECK(t2.order == 3);
  CHECK(t2.qhs);

  const BranchedCoverReport t3 = branched_homology(t, 3);
  CHECK(t3.homology.to_string() == "Z/2 + Z/2");
  CHECK(t3.order == 4);
  CHECK(t3.qhs);

  const BranchedCoverReport t6 = branched_homology(t, 6);
  CHECK(t6.homology.free_rank > 0);
  CHECK(t6.order == 0);
  CHECK_FALSE(t6.qhs);

  CHECK(branched_homology(t, 5).homology.to_string() == "0");
  CHECK(branched_homology(t, 5).order == 1);

  const BranchedCoverReport f2 = branched_homology(sm("1 -2 1 -2"), 2);
  CHECK(f2.homology.to_string() == "Z/5");
  CHECK(f2.order == 5);
  CHECK(f2.qhs);
}

TEST_CASE("Fox order") {
  const SeifertMatrix t = sm("1 1 1");
  CHECK(fox_order(t, 2) == 3);
  CHECK(fox_order(t, 3) == 4);
  CHECK(fox_order(t, 5) == 1);
  CHECK(fox_order(t, 6) == 0);
  CHECK(is_qhs(t, 2));
  CHECK_FALSE(is_qhs(t, 6));
  for (int n = 2; n <= 9; ++n) {
    CHECK(is_qhs(sm(""), n));
    CHECK(fox_order(sm(""), n) == 1);
    CHECK(branched_homology(sm(""), n).homology.to_string() == "0");
  }
}

TEST_CASE("property: Fox order equals the Smith normal form order on the corpus") {
  for (const cli::TableRow& row : corpus()) {
    CAPTURE(row.name);
    const SeifertMatrix v = seifert_matrix(row.word);
    CHECK(branched_homology(v, 1).homology.to_string() == "0");
    CHECK(branched_homology(v, 2).order == knot_determinant(v));
    for (int n = 2; n <= 8; ++n) {
      CAPTURE(n);
      const BranchedCoverReport r = branched_homology(v, n);
      CHECK(r.order == fox_order(v, n));
      CHECK(r.qhs == is_qhs(v, n));
      CHECK(r.qhs == (r.homology.free_rank == 0));
      CHECK(r.qhs == (r.order >= 1));
      if (r.qhs) CHECK(r.order == r.homology.order());
      if (is_prime_power(n)) CHECK(r.qhs);
    }
  }
}

TEST_CASE("property: Fox order on random knots and connected sums") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const BraidWord a = oracle::random_knot(rng, 4, 9);
    const BraidWord b = oracle::random_knot(rng, 3, 6);
    const SeifertMatrix va = seifert_matrix(a), vb = seifert_matrix(b);
    const SeifertMatrix vs = seifert_matrix(connected_sum(a, b));
    const int n = 2 + trial % 5;
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    CAPTURE(n);
    CHECK(branched_homology(va, n).order == fox_order(va, n));
    // H_1 of the cover of a connected sum is the direct sum.
    CHECK(fox_order(vs, n) == fox_order(va, n) * fox_order(vb, n));
    CHECK(branched_homology(vs, n).homology.free_rank ==
          branched_homology(va, n).homology.free_rank + branched_homology(vb, n).homology.free_rank);
  }
}
