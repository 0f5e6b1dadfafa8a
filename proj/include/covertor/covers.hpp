#pragma once

#include "covertor/matrix.hpp"
#include "covertor/seifert.hpp"

namespace covertor {

struct BranchedCoverReport {
  int n = 2;
  AbelianGroupSNF homology;
  Integer order;  // 0 when H_1 is infinite
  bool qhs = false;
};

/// H_1 of the n-fold cyclic branched cover, as the cokernel of the
/// block-circulant realization of V^T - tV over Z[Z/n]: block row i holds V^T
/// in block column i and -V in block column i+1 mod n. n = 1 is accepted and
/// gives the trivial group.
BranchedCoverReport branched_homology(const SeifertMatrix& v, int n);

/// |prod_{m=1}^{n-1} Delta(w^m)| = |Res(t^g Delta(t), 1 + t + ... + t^{n-1})|;
/// 0 when some factor vanishes.
Integer fox_order(const SeifertMatrix& v, int n);

bool is_qhs(const SeifertMatrix& v, int n);

}  // namespace covertor
