#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "depthlab/chartab.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/group.hpp"
#include "test_helpers.hpp"

using depthlab::CharTableModP;
using depthlab::choose_prime;
using depthlab::class_matrices;
using depthlab::conjugacy_classes;
using depthlab::dixon_table;
using depthlab::FiniteGroup;
using depthlab::verify_table;
using testutil::make_group;

namespace {

std::multiset<std::uint64_t> degree_multiset(const CharTableModP& t) {
  return {t.degrees.begin(), t.degrees.end()};
}

}  // namespace

TEST_CASE("group exponents") {
  CHECK(make_group("sym:4").exponent() == 12);
  CHECK(make_group("cyc:5").exponent() == 5);
  CHECK(make_group("sym:6").exponent() == 60);
}

TEST_CASE("prime selection") {
  CHECK(choose_prime(make_group("sym:4")).p == 13);
  CHECK(choose_prime(make_group("cyc:2")).p == 3);
  CHECK(choose_prime(make_group("sym:6")).p == 61);
}

TEST_CASE("prime context properties") {
  for (const char* spec : {"sym:3", "sym:4", "sym:5", "alt:5", "dih:4", "cyc:6"}) {
    const auto g = make_group(spec);
    const auto ctx = choose_prime(g);
    CAPTURE(spec);
    CHECK(ctx.p % ctx.exponent == 1);
    CHECK(ctx.p * ctx.p > 4 * g.size());
    CHECK(g.size() % ctx.p != 0);
    // omega has multiplicative order exactly e
    const depthlab::Fp f{ctx.p};
    CHECK(f.pow(ctx.omega, ctx.exponent) == 1);
    for (std::uint64_t q = 2; q <= ctx.exponent; ++q) {
      if (ctx.exponent % q == 0 && depthlab::is_prime(q)) {
        CHECK(f.pow(ctx.omega, ctx.exponent / q) != 1);
      }
    }
  }
}

TEST_CASE("class matrices") {
  SUBCASE("identity class gives the identity matrix") {
    for (const char* spec : {"sym:3", "sym:4", "dih:4"}) {
      const auto g = make_group(spec);
      const auto classes = conjugacy_classes(g);
      const auto mats = class_matrices(g, classes);
      for (std::size_t j = 0; j < classes.count(); ++j) {
        for (std::size_t k = 0; k < classes.count(); ++k) {
          CHECK(mats[0][j][k] == (j == k ? 1 : 0));
        }
      }
    }
  }

  SUBCASE("C2: involution times itself is the identity") {
    const auto g = make_group("cyc:2");
    const auto classes = conjugacy_classes(g);
    const auto mats = class_matrices(g, classes);
    REQUIRE(classes.count() == 2);
    CHECK(mats[1][1][0] == 1);  // coefficient of the identity class in K_t K_t
    CHECK(mats[1][0][1] == 1);
  }

  SUBCASE("S3: transposition class squared") {
    const auto g = make_group("sym:3");
    const auto classes = conjugacy_classes(g);
    const auto mats = class_matrices(g, classes);
    // locate the transposition and 3-cycle classes
    std::size_t t = 0, c = 0;
    for (std::size_t i = 0; i < classes.count(); ++i) {
      if (classes.class_reps[i].order() == 2) t = i;
      if (classes.class_reps[i].order() == 3) c = i;
    }
    CHECK(mats[t][t][0] == 3);  // 3 on the identity class
    CHECK(mats[t][t][c] == 3);  // 3 on the 3-cycle class
  }

  SUBCASE("class matrices commute") {
    const auto g = make_group("sym:4");
    const auto classes = conjugacy_classes(g);
    const auto mats = class_matrices(g, classes);
    const std::size_t r = classes.count();
    auto mul = [&](const auto& a, const auto& b) {
      std::vector<std::vector<std::uint64_t>> out(r, std::vector<std::uint64_t>(r, 0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
          for (std::size_t j = 0; j < r; ++j) out[i][j] += a[i][k] * b[k][j];
        }
      }
      return out;
    };
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        CHECK(mul(mats[i], mats[j]) == mul(mats[j], mats[i]));
      }
    }
  }
}

TEST_CASE("dixon table of C2") {
  const auto table = dixon_table(make_group("cyc:2"));
  REQUIRE(table.count() == 2);
  const auto p = table.context.p;
  CHECK(table.values[0] == std::vector<std::uint64_t>{1, 1});
  CHECK(table.values[1] == std::vector<std::uint64_t>{1, p - 1});
  CHECK(table.degrees == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("dixon degrees for S3 and S4") {
  const auto s3 = dixon_table(make_group("sym:3"));
  CHECK(degree_multiset(s3) == std::multiset<std::uint64_t>{1, 1, 2});

  const auto s4 = dixon_table(make_group("sym:4"));
  CHECK(degree_multiset(s4) == std::multiset<std::uint64_t>{1, 1, 2, 3, 3});

  const auto s5 = dixon_table(make_group("sym:5"));
  CHECK(degree_multiset(s5) == std::multiset<std::uint64_t>{1, 1, 4, 4, 5, 5, 6});
}

TEST_CASE("degree multisets match the arithmetic-constraint oracle") {
  // The oracle pins the degree multiset down from |G|, the class count and
  // the number of linear characters alone, whenever that data has a unique
  // solution; Dixon must agree wherever the oracle speaks.
  for (const char* spec : {"sym:3", "sym:4", "alt:4", "alt:5", "dih:4", "cyc:6",
                           "gens:(1 2 3 4)(5 6 7 8),(1 5 3 7)(2 8 4 6)"}) {
    const auto g = make_group(spec);
    const auto table = dixon_table(g);
    const auto oracle = testutil::unique_degree_multiset(
        g.size(), table.count(), testutil::abelianization_order(g));
    CAPTURE(spec);
    REQUIRE(oracle.has_value());
    CHECK(table.degrees == *oracle);  // both sorted ascending
  }
}

TEST_CASE("table verification catches corruption") {
  auto table = dixon_table(make_group("sym:4"));
  CHECK(verify_table(table));
  table.values[2][3] = (table.values[2][3] + 1) % table.context.p;
  std::vector<std::string> diagnostics;
  CHECK_FALSE(verify_table(table, &diagnostics));
  CHECK_FALSE(diagnostics.empty());
}

TEST_CASE("verified tables for the whole catalog of groups") {
  for (const char* spec : {"cyc:2", "cyc:3", "cyc:4", "cyc:5", "cyc:6", "dih:4",
                           "gens:(1 2 3 4)(5 6 7 8),(1 5 3 7)(2 8 4 6)", "sym:3", "sym:4",
                           "sym:5", "alt:4", "alt:5"}) {
    CAPTURE(spec);
    const auto g = make_group(spec);
    const auto table = dixon_table(g);
    CHECK(verify_table(table));
    CHECK(table.count() == conjugacy_classes(g).count());
    std::uint64_t sum = 0;
    for (auto d : table.degrees) sum += d * d;
    CHECK(sum == g.size());
  }
}

TEST_CASE("abelian groups have all-linear tables with |G| rows") {
  for (const char* spec : {"cyc:3", "cyc:6", "gens:(1 2),(3 4)"}) {
    const auto g = make_group(spec);
    const auto table = dixon_table(g);
    CAPTURE(spec);
    CHECK(table.count() == g.size());
    CHECK(std::all_of(table.degrees.begin(), table.degrees.end(),
                      [](std::uint64_t d) { return d == 1; }));
  }
}

TEST_CASE("trivial character row is all ones and first") {
  const auto table = dixon_table(make_group("sym:4"));
  CHECK(std::all_of(table.values[0].begin(), table.values[0].end(),
                    [](std::uint64_t v) { return v == 1; }));
}

TEST_CASE("linear character rows are closed under multiplication") {
  for (const char* spec : {"sym:4", "cyc:6", "dih:4"}) {
    const auto table = dixon_table(make_group(spec));
    const depthlab::Fp f{table.context.p};
    for (std::size_t i = 0; i < table.count(); ++i) {
      if (table.degrees[i] != 1) continue;
      for (std::size_t j = 0; j < table.count(); ++j) {
        if (table.degrees[j] != 1) continue;
        std::vector<std::uint64_t> product(table.count());
        for (std::size_t k = 0; k < table.count(); ++k) {
          product[k] = f.mul(table.values[i][k], table.values[j][k]);
        }
        CHECK(std::find(table.values.begin(), table.values.end(), product) !=
              table.values.end());
      }
    }
  }
}

TEST_CASE("degrees are invariant under the choice of prime") {
  for (const char* spec : {"sym:4", "sym:5", "alt:5", "dih:4"}) {
    const auto g = make_group(spec);
    const auto classes = conjugacy_classes(g);
    const auto first = dixon_table(g, classes, choose_prime(g));
    const auto second = dixon_table(g, classes, choose_prime(g, depthlab::kDefaultPrimeSearchCap, 1));
    CAPTURE(spec);
    CHECK(first.context.p != second.context.p);
    CHECK(first.degrees == second.degrees);
  }
}

TEST_CASE("trivial group") {
  const auto table = dixon_table(make_group("cyc:1"));
  CHECK(table.count() == 1);
  CHECK(table.degrees == std::vector<std::uint64_t>{1});
  CHECK(table.values[0] == std::vector<std::uint64_t>{1});
}
