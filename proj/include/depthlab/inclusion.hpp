#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "depthlab/chartab.hpp"
#include "depthlab/group.hpp"
#include "depthlab/matdepth.hpp"

namespace depthlab {

// H-class index -> G-class index, induced by locating each H-class
// representative inside G.
struct ClassFusion {
  std::vector<std::size_t> map;
};

// Induction-restriction multiplicities between the irreducibles of a
// subgroup pair: rows are H-irreducibles, columns G-irreducibles, and
// M_{ij} = <Res chi_j, chi_i>.  Both degree identities are enforced at
// construction, which also pins down irredundancy.
struct InclusionMatrix {
  NonnegMatrix matrix = NonnegMatrix(1, 1);
  std::vector<std::uint64_t> h_degrees;
  std::vector<std::uint64_t> g_degrees;
  std::uint64_t index = 0;  // |G| / |H|
};

struct PipelineConfig {
  std::string cache_dir;  // empty disables the on-disk table cache
  int prime_skip = 0;     // > 0 re-runs with a later admissible prime
  std::uint64_t prime_search_cap = kDefaultPrimeSearchCap;
};

ClassFusion class_fusion(const FiniteGroup& g, const ConjugacyData& g_classes,
                         const FiniteGroup& h, const ConjugacyData& h_classes);

InclusionMatrix inclusion_matrix(const CharTableModP& g_table, const CharTableModP& h_table,
                                 const ClassFusion& fusion);

struct PairDepthReport {
  std::uint64_t group_order = 0;
  std::uint64_t subgroup_order = 0;
  std::uint64_t index = 0;
  std::uint64_t core_order = 0;
  std::uint64_t normalizer_index = 0;
  InclusionMatrix inclusion;
  DepthReport depths;
};

// Full pipeline: tables mod one shared prime, fusion, inclusion matrix,
// depth kernel, plus core order and normalizer index.  Cross-checks the
// normalizer bound min_depth <= 2 |G : N_G(H)| and the depth/h-depth gap;
// a failure of either is a TheoremViolation.
PairDepthReport pair_depth_report(const FiniteGroup& g, const FiniteGroup& h,
                                  const PipelineConfig& config = {});

struct CoreReductionReport {
  std::uint64_t core_order = 0;
  PairDepthReport original;
  PairDepthReport quotient_pair;
  bool quotient_depth_even = false;
  bool sandwich_holds = false;   // d(quot) <= d(orig) <= d(quot) + 1
  bool even_equality_holds = false;  // d(orig) == d(quot) whenever d(quot) is even
  bool h_depth_equal = false;    // min_h_depth agrees across the reduction
};

// Reduces (G, H) by N = core_G(H), recomputes the quotient pair from scratch
// over fresh tables and checks the core-reduction theorems; any violated
// flag raises TheoremViolation.
CoreReductionReport core_reduction_report(const FiniteGroup& g, const FiniteGroup& h,
                                          const PipelineConfig& config = {});

}  // namespace depthlab
