#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "depthlab/chartab.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/inclusion.hpp"
#include "depthlab/matdepth.hpp"
#include "test_helpers.hpp"

using depthlab::CharTableModP;
using depthlab::choose_prime;
using depthlab::class_fusion;
using depthlab::ClassFusion;
using depthlab::conjugacy_classes;
using depthlab::core_reduction_report;
using depthlab::dixon_table;
using depthlab::Error;
using depthlab::ErrorKind;
using depthlab::FiniteGroup;
using depthlab::Fp;
using depthlab::inclusion_matrix;
using depthlab::make_prime_context;
using depthlab::NonnegMatrix;
using depthlab::pair_depth_report;
using depthlab::PipelineConfig;
using testutil::make_group;
using testutil::make_pair;

namespace {

struct PairTables {
  FiniteGroup g, h;
  depthlab::ConjugacyData gc, hc;
  CharTableModP tg, th;
  ClassFusion fusion;
};

PairTables tables_for(const std::string& g_spec, const std::string& h_spec, int prime_skip = 0) {
  auto [g, h] = make_pair(g_spec, h_spec);
  PairTables out{std::move(g), std::move(h), {}, {}, {}, {}, {}};
  out.gc = conjugacy_classes(out.g);
  out.hc = conjugacy_classes(out.h);
  const auto g_ctx = choose_prime(out.g, depthlab::kDefaultPrimeSearchCap, prime_skip);
  const auto h_ctx = make_prime_context(out.h, g_ctx.p);
  out.tg = dixon_table(out.g, out.gc, g_ctx);
  out.th = dixon_table(out.h, out.hc, h_ctx);
  out.fusion = class_fusion(out.g, out.gc, out.h, out.hc);
  return out;
}

// Multiset of rows, each row a multiset of entries: equality up to
// independent row/column permutations is implied for 0/1-free comparisons
// below only when combined with depth checks, so use it just for shapes.
std::multiset<std::multiset<std::uint64_t>> row_multisets(const NonnegMatrix& m) {
  std::multiset<std::multiset<std::uint64_t>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::multiset<std::uint64_t> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.insert(m.at(i, j).get_ui());
    out.insert(row);
  }
  return out;
}

// Independent route to the inclusion matrix: explicit induced characters.
// Ind chi_i(g) = |H|^-1 sum_{x in G} chi_i(x^-1 g x) over x with x^-1 g x in
// H, then M'_{ij} = <Ind chi_i, chi_j>_G.  Uses no fusion data.
NonnegMatrix induced_route(const PairTables& t) {
  const Fp f{t.tg.context.p};
  const std::size_t rh = t.th.count(), rg = t.tg.count();
  const std::uint64_t h_order_inv = f.inv(f.reduce(t.h.size()));
  const std::uint64_t g_order_inv = f.inv(f.reduce(t.g.size()));

  // induced[i][a]: value of Ind chi_i on the G-class a.
  std::vector<std::vector<std::uint64_t>> induced(rh, std::vector<std::uint64_t>(rg, 0));
  for (std::size_t a = 0; a < rg; ++a) {
    const auto& rep = t.gc.class_reps[a];
    std::vector<std::uint64_t> sums(rh, 0);
    for (const auto& x : t.g.elements()) {
      const auto conj = x.inverse().compose(rep).compose(x);
      const auto idx = t.h.index_of(conj);
      if (!idx) continue;
      const std::size_t c = t.hc.class_of[*idx];
      for (std::size_t i = 0; i < rh; ++i) sums[i] = f.add(sums[i], t.th.values[i][c]);
    }
    for (std::size_t i = 0; i < rh; ++i) induced[i][a] = f.mul(sums[i], h_order_inv);
  }

  NonnegMatrix m(rh, rg);
  for (std::size_t i = 0; i < rh; ++i) {
    for (std::size_t j = 0; j < rg; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t a = 0; a < rg; ++a) {
        acc = f.add(acc, f.mul(f.reduce(t.gc.class_sizes[a]),
                               f.mul(induced[i][a], t.tg.values[j][t.gc.inverse_class[a]])));
      }
      m.at(i, j) = static_cast<unsigned long>(f.mul(acc, g_order_inv));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("class fusion for H = G is the identity") {
  const auto t = tables_for("sym:4", "sym:4");
  for (std::size_t c = 0; c < t.fusion.map.size(); ++c) CHECK(t.fusion.map[c] == c);
}

TEST_CASE("class fusion of A3 in S3 merges the two 3-cycle classes") {
  const auto t = tables_for("sym:3", "alt:3");
  REQUIRE(t.fusion.map.size() == 3);
  CHECK(t.fusion.map[0] == 0);
  CHECK(t.fusion.map[1] == t.fusion.map[2]);
  CHECK(t.fusion.map[1] != 0);
}

TEST_CASE("class fusion of D8 in S4 follows cycle type") {
  const auto t = tables_for("sym:4", "gens:(1 2 3 4),(1 3)");
  REQUIRE(t.fusion.map.size() == 5);
  // the two double-transposition-type classes of D8 merge in S4
  std::set<std::size_t> targets(t.fusion.map.begin(), t.fusion.map.end());
  CHECK(targets.size() == 4);
  for (std::size_t c = 0; c < 5; ++c) {
    CHECK(t.hc.class_reps[c].order() == t.gc.class_reps[t.fusion.map[c]].order());
  }
}

TEST_CASE("inclusion matrix for H = G is a permutation of the identity") {
  const auto t = tables_for("sym:4", "sym:4");
  const auto m = inclusion_matrix(t.tg, t.th, t.fusion);
  CHECK(m.index == 1);
  CHECK(m.matrix == NonnegMatrix::identity(5));  // same normalized row order
}

TEST_CASE("inclusion matrix of A3 in S3") {
  const auto t = tables_for("sym:3", "alt:3");
  const auto m = inclusion_matrix(t.tg, t.th, t.fusion);
  CHECK(m.index == 2);
  CHECK(row_multisets(m.matrix) ==
        row_multisets(NonnegMatrix::from_rows({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}})));
  CHECK(depthlab::min_depth(m.matrix) == 2);
  CHECK(depthlab::min_odd_depth(m.matrix) == 3);
  CHECK(depthlab::min_h_depth(m.matrix) == 3);
}

TEST_CASE("inclusion matrix agrees with the induced-character route") {
  for (const auto& [g_spec, h_spec] :
       std::vector<std::pair<std::string, std::string>>{{"sym:4", "gens:(1 2 3 4),(1 3)"},
                                                        {"sym:3", "alt:3"},
                                                        {"sym:4", "gens:(1 2),(1 2 3)"},
                                                        {"alt:5", "alt:4"},
                                                        {"sym:4", "alt:4"}}) {
    CAPTURE(g_spec);
    CAPTURE(h_spec);
    const auto t = tables_for(g_spec, h_spec);
    const auto direct = inclusion_matrix(t.tg, t.th, t.fusion);
    CHECK(direct.matrix == induced_route(t));
  }
}

TEST_CASE("degree identities hold for every catalog pair") {
  for (const auto& [g_spec, h_spec] : testutil::catalog_pairs()) {
    CAPTURE(g_spec);
    CAPTURE(h_spec);
    const auto t = tables_for(g_spec, h_spec);
    const auto m = inclusion_matrix(t.tg, t.th, t.fusion);
    for (std::size_t i = 0; i < m.matrix.rows(); ++i) {
      std::uint64_t sum = 0;
      for (std::size_t j = 0; j < m.matrix.cols(); ++j) {
        sum += m.matrix.at(i, j).get_ui() * m.g_degrees[j];
      }
      CHECK(sum == m.index * m.h_degrees[i]);
    }
    for (std::size_t j = 0; j < m.matrix.cols(); ++j) {
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < m.matrix.rows(); ++i) {
        sum += m.matrix.at(i, j).get_ui() * m.h_degrees[i];
      }
      CHECK(sum == m.g_degrees[j]);
    }
  }
}

TEST_CASE("tables mod different primes are rejected") {
  const auto t = tables_for("sym:3", "alt:3");
  const auto other_ctx = choose_prime(t.h, depthlab::kDefaultPrimeSearchCap, 1);
  const auto other = dixon_table(t.h, t.hc, other_ctx);
  CHECK_THROWS_AS(inclusion_matrix(t.tg, other, t.fusion), Error);
}

TEST_CASE("pair depth reports match the worked examples") {
  SUBCASE("S2 in S3") {
    const auto [g, h] = make_pair("sym:3", "gens:(1 2)");
    const auto report = pair_depth_report(g, h);
    CHECK(report.index == 3);
    CHECK(report.depths.min_depth == 3);
    CHECK(report.depths.min_h_depth == 5);
  }
  SUBCASE("D8 in S4") {
    const auto [g, h] = make_pair("sym:4", "gens:(1 2 3 4),(1 3)");
    const auto report = pair_depth_report(g, h);
    CHECK(report.index == 3);
    CHECK(report.depths.min_depth == 4);
    CHECK(report.core_order == 4);
    CHECK(report.normalizer_index == 3);
  }
  SUBCASE("A4 in S4 is normal, depth two") {
    const auto [g, h] = make_pair("sym:4", "alt:4");
    const auto report = pair_depth_report(g, h);
    CHECK(report.depths.min_depth == 2);
  }
  SUBCASE("H = G has depth one") {
    const auto [g, h] = make_pair("sym:4", "sym:4");
    const auto report = pair_depth_report(g, h);
    CHECK(report.depths.min_depth == 1);
    CHECK(report.depths.min_h_depth == 1);
  }
}

TEST_CASE("depth results are invariant under the prime choice") {
  for (const auto& [g_spec, h_spec] :
       std::vector<std::pair<std::string, std::string>>{{"sym:4", "gens:(1 2 3 4),(1 3)"},
                                                        {"sym:3", "alt:3"},
                                                        {"alt:5", "alt:4"},
                                                        {"sym:4", "gens:(1 2 3 4)"}}) {
    CAPTURE(g_spec);
    CAPTURE(h_spec);
    const auto [g, h] = make_pair(g_spec, h_spec);
    const auto first = pair_depth_report(g, h);
    PipelineConfig alternate;
    alternate.prime_skip = 1;
    const auto second = pair_depth_report(g, h, alternate);
    CHECK(first.depths.min_depth == second.depths.min_depth);
    CHECK(first.depths.min_odd_depth == second.depths.min_odd_depth);
    CHECK(first.depths.min_h_depth == second.depths.min_h_depth);
  }
}

TEST_CASE("normality is equivalent to depth at most two across the catalog") {
  for (const auto& [g_spec, h_spec] : testutil::catalog_pairs()) {
    CAPTURE(g_spec);
    CAPTURE(h_spec);
    const auto [g, h] = make_pair(g_spec, h_spec);
    const auto report = pair_depth_report(g, h);
    CHECK((report.depths.min_depth <= 2) == depthlab::is_normal(g, h));
  }
}

TEST_CASE("core reduction for the S4 / D8 example") {
  const auto [g, h] = make_pair("sym:4", "gens:(1 2 3 4),(1 3)");
  const auto report = core_reduction_report(g, h);
  CHECK(report.core_order == 4);
  CHECK(report.original.depths.min_depth == 4);
  CHECK(report.quotient_pair.group_order == 6);
  CHECK(report.quotient_pair.subgroup_order == 2);
  CHECK(report.quotient_pair.depths.min_depth == 3);
  CHECK(report.sandwich_holds);
  CHECK(report.h_depth_equal);
  CHECK(report.original.depths.min_h_depth == report.quotient_pair.depths.min_h_depth);
}

TEST_CASE("core reduction of a normal subgroup pair") {
  const auto [g, h] = make_pair("sym:4", "alt:4");
  const auto report = core_reduction_report(g, h);
  CHECK(report.core_order == h.size());
  CHECK(report.quotient_pair.subgroup_order == 1);
  CHECK(report.original.depths.min_depth <= 2);
  CHECK(report.sandwich_holds);
  CHECK(report.h_depth_equal);
}

TEST_CASE("core reduction with trivial core reproduces the pair") {
  const auto [g, h] = make_pair("sym:5", "sym:4");
  const auto report = core_reduction_report(g, h);
  CHECK(report.core_order == 1);
  CHECK(report.quotient_pair.group_order == g.size());
  CHECK(report.quotient_pair.depths.min_depth == report.original.depths.min_depth);
  CHECK(report.quotient_pair.depths.min_h_depth == report.original.depths.min_h_depth);
  CHECK(report.quotient_pair.depths.min_odd_depth == report.original.depths.min_odd_depth);
}

TEST_CASE("pipeline rejects non-subgroups") {
  const auto g = make_group("alt:4");
  const auto parsed = depthlab::parse_group_spec("gens:(1 2)", 4);
  const auto h = FiniteGroup::enumerate(parsed.degree, parsed.generators);
  CHECK_THROWS_AS(pair_depth_report(g, h), Error);
  try {
    pair_depth_report(g, h);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASubgroup);
  }
}
