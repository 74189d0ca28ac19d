#pragma once

#include "depthlab/matrix.hpp"

namespace depthlab {

// Depth invariants of an irredundant nonnegative integer matrix M, read off
// the zero patterns of alternating products with the transpose:
//
//   M^(0) = I,  M^(2n) = (M M^T)^n,  M^(2n+1) = (M M^T)^n M.
//
// min_depth      least m >= 1 with support(M^(m+1)) = support(M^(m-1))
// min_odd_depth  least 2n+1 with support(S^n) = support(S^(n+1)), S = M M^T
// min_h_depth    least 2n+1 with support(T^n) = support(T^(n+1)), T = M^T M
//
// All three searches are monotone (supports nest once M is irredundant) and
// stabilize within m <= 2(rows+cols)+1.  Every function here is a pure
// function of its input and safe to call concurrently.
struct DepthReport {
  int min_depth = 0;
  int min_odd_depth = 0;
  int min_h_depth = 0;
  int module_depth_q = 0;
  int s_exponent = 0;  // exponent at which supports of S-powers stabilize
  int t_exponent = 0;  // exponent at which supports of T-powers stabilize
  NonnegMatrix s = NonnegMatrix(1, 1);  // M M^T, exact entries, for diagnostics
  NonnegMatrix t = NonnegMatrix(1, 1);  // M^T M
};

// True iff every row and every column contains a nonzero entry.
bool irredundant(const NonnegMatrix& m);

// Exact alternating power M^(power) as defined above.
NonnegMatrix alternating_power(const NonnegMatrix& m, int power);

int min_depth(const NonnegMatrix& m);
int min_odd_depth(const NonnegMatrix& m);
int min_h_depth(const NonnegMatrix& m);

// (min_h_depth - 1) / 2: the depth of the quotient module Q attached to the
// inclusion, computed from the T-power stabilization exponent.
int module_depth_q(const NonnegMatrix& m);

DepthReport depth_report(const NonnegMatrix& m);

}  // namespace depthlab
