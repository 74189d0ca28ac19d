#include "depthlab/group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <string>

#include "depthlab/errors.hpp"

namespace depthlab {

FiniteGroup FiniteGroup::enumerate(int degree, std::vector<Permutation> generators,
                                   std::size_t cap) {
  if (degree < 1) fail(ErrorKind::DegreeError, "degree must be at least 1");
  if (cap < 1) fail(ErrorKind::CapExceeded, "enumeration cap must be positive");
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      fail(ErrorKind::InvalidPermutation,
           "generator degree " + std::to_string(g.degree()) + " does not match group degree " +
               std::to_string(degree));
    }
  }

  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  std::deque<Permutation> queue;
  std::vector<Permutation> found;
  const Permutation id = Permutation::identity(degree);
  seen.emplace(id, 0);
  found.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation current = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = current.compose(g);
      if (seen.contains(next)) continue;
      if (found.size() >= cap) {
        fail(ErrorKind::CapExceeded,
             "group exceeds enumeration cap of " + std::to_string(cap) + " elements");
      }
      seen.emplace(next, found.size());
      found.push_back(next);
      queue.push_back(next);
    }
  }

  std::sort(found.begin(), found.end());
  FiniteGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);
  group.elements_ = std::move(found);
  group.build_index();
  return group;
}

FiniteGroup FiniteGroup::from_elements(int degree, std::vector<Permutation> elements,
                                       std::vector<Permutation> generators) {
  std::sort(elements.begin(), elements.end());
  FiniteGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);
  group.elements_ = std::move(elements);
  group.build_index();
  assert(!group.elements_.empty() && group.elements_[0].is_identity());
  return group;
}

void FiniteGroup::build_index() {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::inverse_index(std::size_t i) const {
  auto idx = index_of(elements_[i].inverse());
  assert(idx.has_value());
  return *idx;
}

bool FiniteGroup::is_abelian() const {
  for (const auto& a : generators_) {
    for (const auto& b : generators_) {
      if (a.compose(b) != b.compose(a)) return false;
    }
  }
  return true;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (const auto& p : elements_) e = std::lcm(e, p.order());
  return e;
}

ConjugacyData conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.size();
  ConjugacyData data;
  data.class_of.assign(n, static_cast<std::size_t>(-1));

  // Conjugating by generators suffices to sweep out each orbit.  Scanning
  // start points in element order makes the class order deterministic, and
  // start point 0 (the identity) gives class 0 = identity class.
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (data.class_of[start] != static_cast<std::size_t>(-1)) continue;
    const std::size_t cls = data.class_reps.size();
    data.class_reps.push_back(g.element(start));
    std::uint64_t size = 0;
    stack.assign(1, start);
    data.class_of[start] = cls;
    while (!stack.empty()) {
      const std::size_t idx = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& gen : g.generators()) {
        const Permutation conj = g.element(idx).conjugate_by(gen);
        const auto cidx = g.index_of(conj);
        assert(cidx.has_value());
        if (data.class_of[*cidx] == static_cast<std::size_t>(-1)) {
          data.class_of[*cidx] = cls;
          stack.push_back(*cidx);
        }
      }
    }
    data.class_sizes.push_back(size);
  }

  data.inverse_class.resize(data.class_reps.size());
  for (std::size_t c = 0; c < data.class_reps.size(); ++c) {
    const auto idx = g.index_of(data.class_reps[c].inverse());
    assert(idx.has_value());
    data.inverse_class[c] = data.class_of[*idx];
  }
  return data;
}

bool is_subgroup(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.degree() != h.degree()) {
    fail(ErrorKind::DegreeMismatch, "groups act on different numbers of points");
  }
  if (h.size() > g.size() || g.size() % h.size() != 0) return false;
  for (const auto& p : h.elements()) {
    if (!g.contains(p)) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const FiniteGroup& h) {
  if (!is_subgroup(g, h)) return false;
  for (const auto& gen : g.generators()) {
    for (const auto& p : h.elements()) {
      if (!h.contains(p.conjugate_by(gen))) return false;
    }
  }
  return true;
}

namespace {

// Left cosets xH of h in g: returns (coset id per element index, coset reps).
// The rep of each coset is its least element in the sorted element order.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> left_cosets(const FiniteGroup& g,
                                                                          const FiniteGroup& h) {
  std::vector<std::size_t> coset_of(g.size(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (coset_of[i] != static_cast<std::size_t>(-1)) continue;
    const std::size_t cid = reps.size();
    reps.push_back(i);
    for (const auto& p : h.elements()) {
      const auto idx = g.index_of(g.element(i).compose(p));
      assert(idx.has_value());
      coset_of[*idx] = cid;
    }
  }
  return {std::move(coset_of), std::move(reps)};
}

// Permutation induced by x on the cosets of h (left translation).
Permutation coset_action(const FiniteGroup& g, const std::vector<std::size_t>& coset_of,
                         const std::vector<std::size_t>& reps, const Permutation& x) {
  std::vector<int> images(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const auto idx = g.index_of(x.compose(g.element(reps[c])));
    assert(idx.has_value());
    images[c] = static_cast<int>(coset_of[*idx]);
  }
  return Permutation(std::move(images));
}

void require_subgroup(const FiniteGroup& g, const FiniteGroup& h, const char* what) {
  if (!is_subgroup(g, h)) fail(ErrorKind::NotASubgroup, std::string(what) + ": not a subgroup");
}

}  // namespace

FiniteGroup core(const FiniteGroup& g, const FiniteGroup& h) {
  require_subgroup(g, h, "core");
  const auto [coset_of, reps] = left_cosets(g, h);
  std::vector<Permutation> kernel;
  for (const auto& x : g.elements()) {
    if (coset_action(g, coset_of, reps, x).is_identity()) kernel.push_back(x);
  }
  std::vector<Permutation> gens;
  for (const auto& p : kernel) {
    if (!p.is_identity()) gens.push_back(p);
  }
  return FiniteGroup::from_elements(g.degree(), std::move(kernel), std::move(gens));
}

FiniteGroup normalizer(const FiniteGroup& g, const FiniteGroup& h) {
  require_subgroup(g, h, "normalizer");
  std::vector<Permutation> elems;
  for (const auto& x : g.elements()) {
    bool stabilizes = true;
    for (const auto& p : h.elements()) {
      if (!h.contains(p.conjugate_by(x))) {
        stabilizes = false;
        break;
      }
    }
    if (stabilizes) elems.push_back(x);
  }
  std::vector<Permutation> gens;
  for (const auto& p : elems) {
    if (!p.is_identity()) gens.push_back(p);
  }
  return FiniteGroup::from_elements(g.degree(), std::move(elems), std::move(gens));
}

QuotientPresentation quotient(const FiniteGroup& g, const FiniteGroup& n) {
  if (!is_normal(g, n)) fail(ErrorKind::NotNormal, "quotient: subgroup is not normal");
  const auto [coset_of, reps] = left_cosets(g, n);

  std::vector<Permutation> images;
  images.reserve(g.size());
  for (const auto& x : g.elements()) images.push_back(coset_action(g, coset_of, reps, x));

  std::vector<Permutation> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  assert(sorted.size() == g.size() / n.size());

  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) {
    Permutation img = coset_action(g, coset_of, reps, gen);
    if (!img.is_identity()) gens.push_back(std::move(img));
  }

  QuotientPresentation q;
  q.quotient = FiniteGroup::from_elements(static_cast<int>(reps.size()), std::move(sorted),
                                          std::move(gens));
  q.projection.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto idx = q.quotient.index_of(images[i]);
    assert(idx.has_value());
    q.projection[i] = *idx;
  }
  q.parent = std::make_shared<FiniteGroup>(g);
  q.kernel = std::make_shared<FiniteGroup>(n);
  return q;
}

FiniteGroup induced_subgroup_image(const QuotientPresentation& q, const FiniteGroup& h) {
  require_subgroup(*q.parent, h, "induced image");
  require_subgroup(h, *q.kernel, "induced image (kernel inside subgroup)");
  std::vector<Permutation> images;
  for (const auto& p : h.elements()) {
    const auto idx = q.parent->index_of(p);
    images.push_back(q.quotient.element(q.projection[*idx]));
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  assert(images.size() == h.size() / q.kernel->size());
  std::vector<Permutation> gens;
  for (const auto& p : images) {
    if (!p.is_identity()) gens.push_back(p);
  }
  return FiniteGroup::from_elements(q.quotient.degree(), std::move(images), std::move(gens));
}

}  // namespace depthlab
