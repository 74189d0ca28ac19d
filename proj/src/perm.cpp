#include "depthlab/perm.hpp"

#include <algorithm>
#include <sstream>

#include "depthlab/errors.hpp"

namespace depthlab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)]) {
      fail(ErrorKind::InvalidPermutation, "image array is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree()) fail(ErrorKind::DegreeMismatch, "composition of unequal degrees");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
  }
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  return g.compose(*this).compose(g.inverse());
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int x = start;
    do {
      seen[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
      x = images_[static_cast<std::size_t>(x)];
    } while (x != start);
    if (cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (const auto& cycle : cycles()) {
    ord = std::lcm(ord, static_cast<std::uint64_t>(cycle.size()));
  }
  return ord;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cycle : cs) {
    os << "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      os << cycle[i] + 1;
      if (i + 1 < cycle.size()) os << " ";
    }
    os << ")";
  }
  return os.str();
}

}  // namespace depthlab
