#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace depthlab {

// Zero pattern of a nonnegative matrix.  Products of support matrices track
// supports of products of the underlying matrices exactly: with nonnegative
// entries there is no cancellation.
class SupportMatrix {
public:
  SupportMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  static SupportMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value) { bits_[i * cols_ + j] = value ? 1 : 0; }

  SupportMatrix operator*(const SupportMatrix& rhs) const;

  // Entrywise containment of nonzero patterns.
  bool subset_of(const SupportMatrix& other) const;
  std::size_t zero_count() const;

  friend bool operator==(const SupportMatrix&, const SupportMatrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> bits_;
};

// Dense nonnegative integer matrix with exact arbitrary-precision entries.
// Powers of the derived matrices S = M M^T overflow 64-bit words already for
// moderate chain lengths, so entries are mpz throughout.
class NonnegMatrix {
public:
  NonnegMatrix(std::size_t rows, std::size_t cols);
  NonnegMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

  static NonnegMatrix identity(std::size_t n);
  static NonnegMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const mpz_class& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  NonnegMatrix transpose() const;
  NonnegMatrix operator*(const NonnegMatrix& rhs) const;
  SupportMatrix support() const;

  std::string to_string() const;

  friend bool operator==(const NonnegMatrix&, const NonnegMatrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpz_class> entries_;
};

}  // namespace depthlab
