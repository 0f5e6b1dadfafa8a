#include "covertor/covers.hpp"

#include "covertor/error.hpp"

namespace covertor {

BranchedCoverReport branched_homology(const SeifertMatrix& sm, int n) {
  if (n < 1) throw Error(ErrorCode::ValidationError, "cover degree must be positive");
  const IntMatrix& v = sm.matrix();
  const int s = v.rows();
  IntMatrix presentation(s * n, s * n, Integer(0));
  for (int block = 0; block < n; ++block) {
    const int next = (block + 1) % n;
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) {
        presentation(block * s + i, block * s + j) += v(j, i);
        presentation(block * s + i, next * s + j) -= v(i, j);
      }
    }
  }
  BranchedCoverReport report;
  report.n = n;
  report.homology = smith_normal_form(std::move(presentation));
  report.order = report.homology.order();
  report.qhs = report.homology.is_finite();
  return report;
}

Integer fox_order(const SeifertMatrix& v, int n) {
  if (n < 1) throw Error(ErrorCode::ValidationError, "cover degree must be positive");
  const IntPoly numerator = alexander_numerator(v);
  const IntPoly cyclic(std::vector<Integer>(n, 1));
  return resultant_abs(numerator, cyclic);
}

bool is_qhs(const SeifertMatrix& v, int n) { return fox_order(v, n) != 0; }

}  // namespace covertor
