#include "depthlab/groupspec.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "depthlab/errors.hpp"

namespace depthlab {

namespace {

[[noreturn]] void parse_fail(const std::string& spec, std::size_t pos, const std::string& what) {
  fail(ErrorKind::ParseError,
       "bad group spec \"" + spec + "\" at position " + std::to_string(pos) + ": " + what);
}

int parse_family_parameter(const std::string& spec, std::size_t pos) {
  if (pos >= spec.size()) parse_fail(spec, pos, "missing parameter");
  std::size_t end = pos;
  while (end < spec.size() && std::isdigit(static_cast<unsigned char>(spec[end]))) ++end;
  if (end == pos || end != spec.size()) parse_fail(spec, pos, "expected a positive integer");
  const long value = std::stol(spec.substr(pos, end - pos));
  if (value < 1 || value > 1000000) parse_fail(spec, pos, "parameter out of range");
  return static_cast<int>(value);
}

// Cycles of one generator: "(1 2)(3 4)".  1-indexed, disjoint; "()" and
// one-point cycles denote fixed points, so "gens:()" is the trivial group.
// `touched` collects every point mentioned, for degree inference.
std::vector<std::vector<int>> parse_cycles(const std::string& spec, std::size_t& pos,
                                           std::set<int>& touched) {
  std::vector<std::vector<int>> cycles;
  std::set<int> used;
  bool saw_group = false;
  while (pos < spec.size()) {
    while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos]))) ++pos;
    if (pos >= spec.size() || spec[pos] != '(') break;
    const std::size_t open = pos;
    ++pos;
    saw_group = true;
    std::vector<int> cycle;
    while (true) {
      while (pos < spec.size() &&
             (std::isspace(static_cast<unsigned char>(spec[pos])) || spec[pos] == ',')) {
        ++pos;
      }
      if (pos >= spec.size()) parse_fail(spec, open, "unclosed cycle");
      if (spec[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(spec[pos]))) {
        parse_fail(spec, pos, "expected a point or ')'");
      }
      std::size_t end = pos;
      while (end < spec.size() && std::isdigit(static_cast<unsigned char>(spec[end]))) ++end;
      const long point = std::stol(spec.substr(pos, end - pos));
      if (point < 1) parse_fail(spec, pos, "points are 1-indexed");
      if (!used.insert(static_cast<int>(point)).second) {
        parse_fail(spec, pos, "point repeated; cycles must be disjoint");
      }
      touched.insert(static_cast<int>(point));
      cycle.push_back(static_cast<int>(point));
      pos = end;
    }
    if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
  }
  if (!saw_group) parse_fail(spec, pos, "expected a cycle");
  return cycles;
}

Permutation permutation_from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i] - 1;
      const int to = cycle[(i + 1) % cycle.size()] - 1;
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation cycle_perm(int degree, const std::vector<int>& points_1indexed) {
  return permutation_from_cycles({points_1indexed}, degree);
}

}  // namespace

GroupSpec parse_group_spec(const std::string& spec, std::optional<int> ambient_degree) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) parse_fail(spec, 0, "expected \"family:parameter\"");
  const std::string family = spec.substr(0, colon);

  GroupSpec out;
  out.text = spec;

  if (family == "gens") {
    std::size_t pos = colon + 1;
    std::set<int> touched;
    std::vector<std::vector<std::vector<int>>> generator_cycles;
    while (true) {
      generator_cycles.push_back(parse_cycles(spec, pos, touched));
      while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos]))) ++pos;
      if (pos >= spec.size()) break;
      if (spec[pos] != ',') parse_fail(spec, pos, "expected ',' between generators");
      ++pos;
    }
    int degree = ambient_degree.value_or(0);
    if (!touched.empty()) degree = std::max(degree, *touched.rbegin());
    if (degree < 1) parse_fail(spec, colon + 1, "no points mentioned");
    if (ambient_degree && !touched.empty() && *touched.rbegin() > *ambient_degree) {
      fail(ErrorKind::DegreeError,
           "subgroup generator moves point " + std::to_string(*touched.rbegin()) +
               " outside the ambient degree " + std::to_string(*ambient_degree));
    }
    out.degree = degree;
    for (const auto& cycles : generator_cycles) {
      out.generators.push_back(permutation_from_cycles(cycles, degree));
    }
    return out;
  }

  const int n = parse_family_parameter(spec, colon + 1);
  if (family == "sym") {
    out.degree = n;
    if (n >= 2) {
      out.generators.push_back(cycle_perm(n, {1, 2}));
      std::vector<int> full(static_cast<std::size_t>(n));
      std::iota(full.begin(), full.end(), 1);
      out.generators.push_back(cycle_perm(n, full));
    }
  } else if (family == "alt") {
    out.degree = n;
    for (int k = 3; k <= n; ++k) out.generators.push_back(cycle_perm(n, {1, 2, k}));
  } else if (family == "cyc") {
    out.degree = n;
    if (n >= 2) {
      std::vector<int> full(static_cast<std::size_t>(n));
      std::iota(full.begin(), full.end(), 1);
      out.generators.push_back(cycle_perm(n, full));
    }
  } else if (family == "dih") {
    if (n < 3) {
      fail(ErrorKind::DegreeError, "dih:n needs n >= 3 for a faithful degree-n action");
    }
    out.degree = n;
    std::vector<int> full(static_cast<std::size_t>(n));
    std::iota(full.begin(), full.end(), 1);
    out.generators.push_back(cycle_perm(n, full));
    // Reflection fixing point 1: i -> n + 2 - i.
    std::vector<int> reflect(static_cast<std::size_t>(n));
    reflect[0] = 0;
    for (int i = 1; i < n; ++i) reflect[static_cast<std::size_t>(i)] = n - i;
    out.generators.emplace_back(std::move(reflect));
  } else {
    parse_fail(spec, 0, "unknown family \"" + family + "\"");
  }

  if (ambient_degree && out.degree > *ambient_degree) {
    fail(ErrorKind::DegreeError, "subgroup degree " + std::to_string(out.degree) +
                                     " exceeds ambient degree " + std::to_string(*ambient_degree));
  }
  if (ambient_degree && out.degree < *ambient_degree) {
    // Widen to the ambient degree, fixing the new points.
    std::vector<Permutation> widened;
    for (const auto& g : out.generators) {
      std::vector<int> images(static_cast<std::size_t>(*ambient_degree));
      std::iota(images.begin(), images.end(), 0);
      for (int i = 0; i < g.degree(); ++i) images[static_cast<std::size_t>(i)] = g(i);
      widened.emplace_back(std::move(images));
    }
    out.generators = std::move(widened);
    out.degree = *ambient_degree;
  }
  return out;
}

}  // namespace depthlab
