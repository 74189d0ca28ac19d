#include "depthlab/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace depthlab {

SupportMatrix SupportMatrix::identity(std::size_t n) {
  SupportMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

SupportMatrix SupportMatrix::operator*(const SupportMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("support matrix shape mismatch");
  SupportMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(i, k)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs.get(k, j)) out.set(i, j, true);
      }
    }
  }
  return out;
}

bool SupportMatrix::subset_of(const SupportMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

std::size_t SupportMatrix::zero_count() const {
  std::size_t n = 0;
  for (auto b : bits_) {
    if (!b) ++n;
  }
  return n;
}

NonnegMatrix::NonnegMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, mpz_class(0)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

NonnegMatrix::NonnegMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) throw std::invalid_argument("entry count mismatch");
  for (const auto& e : entries_) {
    if (e < 0) throw std::invalid_argument("matrix entries must be nonnegative");
  }
}

NonnegMatrix NonnegMatrix::identity(std::size_t n) {
  NonnegMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

NonnegMatrix NonnegMatrix::from_rows(const std::vector<std::vector<std::uint64_t>>& rows) {
  if (rows.empty() || rows[0].empty()) throw std::invalid_argument("matrix dimensions must be positive");
  const std::size_t cols = rows[0].size();
  std::vector<mpz_class> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("ragged rows");
    for (auto v : row) entries.emplace_back(static_cast<unsigned long>(v));
  }
  return NonnegMatrix(rows.size(), cols, std::move(entries));
}

NonnegMatrix NonnegMatrix::transpose() const {
  NonnegMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

NonnegMatrix NonnegMatrix::operator*(const NonnegMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  NonnegMatrix out(rows_, rhs.cols_);
  mpz_class tmp;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const mpz_class& b = rhs.at(k, j);
        if (b == 0) continue;
        tmp = a * b;
        out.at(i, j) += tmp;
      }
    }
  }
  return out;
}

SupportMatrix NonnegMatrix::support() const {
  SupportMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j) != 0);
  }
  return out;
}

std::string NonnegMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) {
      os << at(i, j).get_str();
      if (j + 1 < cols_) os << " ";
    }
    os << (i + 1 < rows_ ? "\n" : "]");
  }
  return os.str();
}

}  // namespace depthlab
