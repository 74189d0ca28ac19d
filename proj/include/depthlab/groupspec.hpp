#pragma once

#include <optional>
#include <string>
#include <vector>

#include "depthlab/perm.hpp"

namespace depthlab {

// Parsed form of a group spec string:
//   "sym:n" | "alt:n" | "cyc:n" | "dih:n"   named families
//   "gens:<cycles>"                         1-indexed disjoint-cycle lists,
//                                           e.g. "gens:(1 2)(3 4), (1 2 3)"
// Degree is the family parameter, or the largest moved point of a gens spec;
// ambient_degree (the enclosing group's degree, for subgroup specs) widens it.
struct GroupSpec {
  int degree = 0;
  std::vector<Permutation> generators;
  std::string text;  // original spec string
};

GroupSpec parse_group_spec(const std::string& spec,
                           std::optional<int> ambient_degree = std::nullopt);

}  // namespace depthlab
