#pragma once

#include <cstdint>
#include <vector>

#include "depthlab/matrix.hpp"

namespace depthlab {

// Weakly decreasing positive parts summing to n.
struct Partition {
  std::vector<int> parts;

  int sum() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

// All partitions of n, in reverse-lexicographic order ((n) first,
// (1,...,1) last).
std::vector<Partition> partitions(int n);

// 0/1 matrix of add-one-box containments between partitions of n (rows) and
// of n+1 (columns), both in reverse-lexicographic order: the inclusion
// matrix of the symmetric-group chain in characteristic zero.
struct BranchingMatrix {
  std::vector<Partition> row_labels;
  std::vector<Partition> col_labels;
  NonnegMatrix matrix;
};

BranchingMatrix young_branching_matrix(int n);

// Closed forms for the three chain families.  The square-root ceilings are
// evaluated by exact integer inequalities, never floating point.
int sym_chain_depth(int n);      // 2n - 1, n >= 1
int alt_chain_depth(int n);      // 2(n - ceil(sqrt(n))) + 1, n >= 2
int danz_twisted_depth(int n);   // 2(n - ceil((sqrt(8n+1)-1)/2)) + 1, n >= 2

struct ChainConsistency {
  int n = 0;
  int sym = 0;
  int alt = 0;
  int twisted = 0;
  int young_matrix_depth = 0;
};

// Cross-checks twisted <= alt <= sym and that the branching-matrix depth
// equals the symmetric closed form; a failure is a TheoremViolation.
ChainConsistency chain_consistency(int n);

}  // namespace depthlab
