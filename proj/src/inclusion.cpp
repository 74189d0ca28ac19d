#include "depthlab/inclusion.hpp"

#include <cassert>
#include <string>

#include "depthlab/cache.hpp"
#include "depthlab/errors.hpp"

namespace depthlab {

ClassFusion class_fusion(const FiniteGroup& g, const ConjugacyData& g_classes,
                         const FiniteGroup& h, const ConjugacyData& h_classes) {
  if (g.degree() != h.degree()) {
    fail(ErrorKind::DegreeMismatch, "class fusion: groups act on different numbers of points");
  }
  ClassFusion fusion;
  fusion.map.resize(h_classes.count());
  for (std::size_t c = 0; c < h_classes.count(); ++c) {
    const auto idx = g.index_of(h_classes.class_reps[c]);
    if (!idx) fail(ErrorKind::NotASubgroup, "class fusion: representative not in the group");
    fusion.map[c] = g_classes.class_of[*idx];
    assert(h_classes.class_reps[c].order() == g_classes.class_reps[fusion.map[c]].order());
  }
  assert(fusion.map[0] == 0);
  return fusion;
}

InclusionMatrix inclusion_matrix(const CharTableModP& g_table, const CharTableModP& h_table,
                                 const ClassFusion& fusion) {
  if (g_table.context.p != h_table.context.p) {
    fail(ErrorKind::PrimeMismatch, "inclusion matrix requires both tables mod the same prime");
  }
  const Fp f{g_table.context.p};
  const std::size_t h_count = h_table.count();
  const std::size_t g_count = g_table.count();
  check(g_table.group_order % h_table.group_order == 0, ErrorKind::NotASubgroup,
        "subgroup order does not divide group order");
  const std::uint64_t index = g_table.group_order / h_table.group_order;

  const std::uint64_t lift_limit = ceil_isqrt(g_table.group_order);
  const std::uint64_t h_order_inv = f.inv(f.reduce(h_table.group_order));

  NonnegMatrix m(h_count, g_count);
  for (std::size_t i = 0; i < h_count; ++i) {
    for (std::size_t j = 0; j < g_count; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < h_count; ++c) {
        const std::uint64_t term =
            f.mul(f.reduce(h_table.classes.class_sizes[c]),
                  f.mul(g_table.values[j][fusion.map[c]],
                        h_table.values[i][h_table.classes.inverse_class[c]]));
        acc = f.add(acc, term);
      }
      const std::uint64_t lift = f.mul(acc, h_order_inv);
      if (lift > lift_limit) {
        fail(ErrorKind::LiftOutOfRange,
             "multiplicity lift " + std::to_string(lift) + " exceeds ceil(sqrt(|G|)) = " +
                 std::to_string(lift_limit) + "; table or fusion is corrupt");
      }
      m.at(i, j) = static_cast<unsigned long>(lift);
    }
  }

  // Exact integer degree identities: induction along rows, restriction along
  // columns.  They subsume irredundancy (degrees are positive).
  for (std::size_t i = 0; i < h_count; ++i) {
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < g_count; ++j) {
      sum += m.at(i, j).get_ui() * g_table.degrees[j];
    }
    if (sum != index * h_table.degrees[i]) {
      fail(ErrorKind::DegreeIdentityViolation,
           "induction degree identity fails in row " + std::to_string(i));
    }
  }
  for (std::size_t j = 0; j < g_count; ++j) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < h_count; ++i) {
      sum += m.at(i, j).get_ui() * h_table.degrees[i];
    }
    if (sum != g_table.degrees[j]) {
      fail(ErrorKind::DegreeIdentityViolation,
           "restriction degree identity fails in column " + std::to_string(j));
    }
  }
  assert(irredundant(m));

  InclusionMatrix out{.matrix = std::move(m),
                      .h_degrees = h_table.degrees,
                      .g_degrees = g_table.degrees,
                      .index = index};
  return out;
}

PairDepthReport pair_depth_report(const FiniteGroup& g, const FiniteGroup& h,
                                  const PipelineConfig& config) {
  if (!is_subgroup(g, h)) fail(ErrorKind::NotASubgroup, "pair report: H is not a subgroup of G");

  const auto g_classes = conjugacy_classes(g);
  const auto h_classes = conjugacy_classes(h);

  // One shared prime, chosen for G; exp(H) divides exp(G), so it is
  // admissible for H as well.
  const PrimeContext g_context = choose_prime(g, config.prime_search_cap, config.prime_skip);
  const PrimeContext h_context = make_prime_context(h, g_context.p);

  const CharTableModP g_table = dixon_table_cached(g, g_classes, g_context, config.cache_dir);
  const CharTableModP h_table = dixon_table_cached(h, h_classes, h_context, config.cache_dir);

  const ClassFusion fusion = class_fusion(g, g_classes, h, h_classes);

  PairDepthReport report;
  report.group_order = g.size();
  report.subgroup_order = h.size();
  report.inclusion = inclusion_matrix(g_table, h_table, fusion);
  report.index = report.inclusion.index;
  report.depths = depth_report(report.inclusion.matrix);
  report.core_order = core(g, h).size();
  report.normalizer_index = g.size() / normalizer(g, h).size();

  // Proved bounds; failures can only mean an implementation bug.
  check(report.depths.min_depth <= 2 * static_cast<int>(report.normalizer_index),
        ErrorKind::TheoremViolation, "min_depth exceeds 2 |G : N_G(H)|");
  const int gap = report.depths.min_depth - report.depths.min_h_depth;
  check(-2 <= gap && gap <= 1, ErrorKind::TheoremViolation,
        "depth/h-depth gap outside [-2, 1]");
  return report;
}

CoreReductionReport core_reduction_report(const FiniteGroup& g, const FiniteGroup& h,
                                          const PipelineConfig& config) {
  if (!is_subgroup(g, h)) fail(ErrorKind::NotASubgroup, "core reduction: not a subgroup");

  CoreReductionReport report;
  report.original = pair_depth_report(g, h, config);

  const FiniteGroup n = core(g, h);
  report.core_order = n.size();

  const QuotientPresentation q = quotient(g, n);
  const FiniteGroup h_image = induced_subgroup_image(q, h);

  // The reduced pair is corefree; recompute it over fresh tables so the
  // theorem checks compare two independent computations.
  check(core(q.quotient, h_image).size() == 1, ErrorKind::TheoremViolation,
        "core of the reduced pair is not trivial");
  report.quotient_pair = pair_depth_report(q.quotient, h_image, config);

  const int original_depth = report.original.depths.min_depth;
  const int quotient_depth = report.quotient_pair.depths.min_depth;
  report.quotient_depth_even = quotient_depth % 2 == 0;
  report.sandwich_holds =
      quotient_depth <= original_depth && original_depth <= quotient_depth + 1;
  report.even_equality_holds = !report.quotient_depth_even || original_depth == quotient_depth;
  report.h_depth_equal =
      report.original.depths.min_h_depth == report.quotient_pair.depths.min_h_depth;

  check(report.sandwich_holds, ErrorKind::TheoremViolation,
        "core reduction sandwich d(quot) <= d <= d(quot)+1 fails");
  check(report.even_equality_holds, ErrorKind::TheoremViolation,
        "even quotient depth must force equality of depths");
  check(report.h_depth_equal, ErrorKind::TheoremViolation,
        "h-depth changed across the core reduction");
  return report;
}

}  // namespace depthlab
