#include "depthlab/modp.hpp"

#include <cassert>

namespace depthlab {

std::uint64_t Fp::pow(std::uint64_t base, std::uint64_t e) const {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t Fp::inv(std::uint64_t a) const {
  assert(a % p != 0);
  return pow(a, p - 2);
}

FpMat fp_identity(std::size_t n) {
  FpMat m(n, FpVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

FpVec fp_mat_vec(const FpMat& a, const FpVec& v, const Fp& f) {
  FpVec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc = f.add(acc, f.mul(a[i][j], v[j]));
    out[i] = acc;
  }
  return out;
}

FpMat fp_mat_mul(const FpMat& a, const FpMat& b, const Fp& f) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  FpMat out(n, FpVec(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      const std::uint64_t x = a[i][t];
      if (x == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] = f.add(out[i][j], f.mul(x, b[t][j]));
    }
  }
  return out;
}

std::vector<FpVec> fp_kernel_basis(FpMat a, const Fp& f) {
  if (a.empty()) return {};
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[row], a[pivot]);
    const std::uint64_t inv = f.inv(a[row][col]);
    for (std::size_t j = col; j < cols; ++j) a[row][j] = f.mul(a[row][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const std::uint64_t factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        a[i][j] = f.sub(a[i][j], f.mul(factor, a[row][j]));
      }
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_col) is_pivot[c] = 1;

  std::vector<FpVec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    FpVec v(cols, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      v[pivot_col[r]] = f.neg(a[r][free_col]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace depthlab
