#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace depthlab {

// A permutation of {0, ..., degree-1}, stored as its image array.
// 0-indexed internally; 1-indexed cycle notation only at the CLI boundary.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  // Composition: (a.compose(b))(x) = a(b(x)), i.e. b acts first.
  Permutation compose(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation conjugate_by(const Permutation& g) const;  // g * this * g^-1

  // Multiplicative order, via cycle lengths.
  std::uint64_t order() const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, each starting at its least point

  // 1-indexed disjoint cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

inline Permutation operator*(const Permutation& a, const Permutation& b) { return a.compose(b); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace depthlab
