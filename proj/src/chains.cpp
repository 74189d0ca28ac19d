#include "depthlab/chains.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "depthlab/errors.hpp"
#include "depthlab/matdepth.hpp"

namespace depthlab {

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

void emit_partitions(int remaining, int max_part, Partition& current,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.parts.push_back(part);
    emit_partitions(remaining - part, part, current, out);
    current.parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<Partition> out;
  Partition current;
  emit_partitions(n, n == 0 ? 1 : n, current, out);
  return out;
}

BranchingMatrix young_branching_matrix(int n) {
  if (n < 1) throw std::invalid_argument("branching matrix needs n >= 1");
  std::vector<Partition> rows = partitions(n);
  std::vector<Partition> cols = partitions(n + 1);
  std::map<Partition, std::size_t> col_index;
  for (std::size_t j = 0; j < cols.size(); ++j) col_index.emplace(cols[j], j);

  NonnegMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& lambda = rows[i].parts;
    // Add one box at every corner: grow part k when the result stays weakly
    // decreasing, or append a new part of size 1.
    for (std::size_t k = 0; k <= lambda.size(); ++k) {
      Partition mu = rows[i];
      if (k < lambda.size()) {
        if (k > 0 && lambda[k - 1] == lambda[k]) continue;
        ++mu.parts[k];
      } else {
        mu.parts.push_back(1);
      }
      m.at(i, col_index.at(mu)) = 1;
    }
  }
  return BranchingMatrix{std::move(rows), std::move(cols), std::move(m)};
}

int sym_chain_depth(int n) {
  if (n < 1) throw std::invalid_argument("symmetric chain needs n >= 1");
  return 2 * n - 1;
}

namespace {

// Least k with k^2 >= n: the exact integer form of ceil(sqrt(n)).
int ceil_sqrt_int(int n) {
  int k = 0;
  while (k * k < n) ++k;
  return k;
}

// Least k with k(k+1) >= 2n: the exact integer form of
// ceil((sqrt(8n+1) - 1) / 2).
int ceil_triangular_index(int n) {
  int k = 0;
  while (k * (k + 1) < 2 * n) ++k;
  return k;
}

}  // namespace

int alt_chain_depth(int n) {
  if (n < 2) throw std::invalid_argument("alternating chain formula needs n >= 2");
  return 2 * (n - ceil_sqrt_int(n)) + 1;
}

int danz_twisted_depth(int n) {
  if (n < 2) throw std::invalid_argument("twisted chain formula needs n >= 2");
  return 2 * (n - ceil_triangular_index(n)) + 1;
}

ChainConsistency chain_consistency(int n) {
  if (n < 2) throw std::invalid_argument("chain consistency needs n >= 2");
  ChainConsistency report;
  report.n = n;
  report.sym = sym_chain_depth(n);
  report.alt = alt_chain_depth(n);
  report.twisted = danz_twisted_depth(n);
  report.young_matrix_depth = min_depth(young_branching_matrix(n).matrix);

  check(report.twisted <= report.sym, ErrorKind::TheoremViolation,
        "twisted chain depth exceeds the symmetric chain depth at n = " + std::to_string(n));
  check(report.twisted <= report.alt, ErrorKind::TheoremViolation,
        "twisted chain depth exceeds the alternating chain depth at n = " + std::to_string(n));
  check(report.young_matrix_depth == report.sym, ErrorKind::TheoremViolation,
        "branching-matrix depth disagrees with 2n-1 at n = " + std::to_string(n));
  return report;
}

}  // namespace depthlab
