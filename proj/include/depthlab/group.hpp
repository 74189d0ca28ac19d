#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "depthlab/perm.hpp"

namespace depthlab {

inline constexpr std::size_t kDefaultEnumerationCap = 200000;

// A fully enumerated permutation group.  Elements are kept sorted
// lexicographically by image array, which makes the element list (and hence
// everything derived from it: class order, table row order, cache keys)
// independent of the generator order.  Index 0 is always the identity.
// Immutable after construction; safe to share across threads.
class FiniteGroup {
public:
  FiniteGroup() = default;  // empty placeholder; assign from enumerate()

  // Breadth-first closure of the generators.  Throws CapExceeded if the group
  // is larger than `cap`, InvalidPermutation for malformed generators.
  static FiniteGroup enumerate(int degree, std::vector<Permutation> generators,
                               std::size_t cap = kDefaultEnumerationCap);

  // Wraps an element set already known to be closed (kernels, normalizers).
  static FiniteGroup from_elements(int degree, std::vector<Permutation> elements,
                                   std::vector<Permutation> generators);

  int degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }
  std::size_t inverse_index(std::size_t i) const;

  bool is_abelian() const;

  // lcm of element orders.
  std::uint64_t exponent() const;

private:
  void build_index();

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

struct ConjugacyData {
  std::vector<Permutation> class_reps;     // class 0 is the identity class
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::size_t> class_of;       // element index -> class index
  std::vector<std::size_t> inverse_class;  // class index -> class of inverses

  std::size_t count() const { return class_reps.size(); }
};

ConjugacyData conjugacy_classes(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, const FiniteGroup& h);
bool is_normal(const FiniteGroup& g, const FiniteGroup& h);

// Largest normal subgroup of g contained in h, computed as the kernel of the
// action of g on left cosets of h.
FiniteGroup core(const FiniteGroup& g, const FiniteGroup& h);

// { x in g : x h x^-1 = h }.
FiniteGroup normalizer(const FiniteGroup& g, const FiniteGroup& h);

// Quotient g/n realized as the faithful action of g on left cosets of n.
struct QuotientPresentation {
  FiniteGroup quotient;
  std::vector<std::size_t> projection;  // parent element index -> quotient element index
  std::shared_ptr<const FiniteGroup> parent;
  std::shared_ptr<const FiniteGroup> kernel;

  std::size_t project_index(std::size_t parent_index) const { return projection[parent_index]; }
};

QuotientPresentation quotient(const FiniteGroup& g, const FiniteGroup& n);

// Image of an intermediate subgroup n <= h <= g under the projection.
FiniteGroup induced_subgroup_image(const QuotientPresentation& q, const FiniteGroup& h);

}  // namespace depthlab
