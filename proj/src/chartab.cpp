#include "depthlab/chartab.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "depthlab/errors.hpp"

namespace depthlab {

std::uint64_t ceil_isqrt(std::uint64_t n) {
  std::uint64_t k = 0;
  while (k * k < n) ++k;
  return k;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t find_primitive_root_of_unity(std::uint64_t p, std::uint64_t e) {
  const Fp f{p};
  if (e == 1) return 1;
  const auto qs = prime_divisors(e);
  for (std::uint64_t g = 2; g < p; ++g) {
    const std::uint64_t cand = f.pow(g, (p - 1) / e);
    if (cand == 1) continue;
    bool primitive = true;
    for (auto q : qs) {
      if (f.pow(cand, e / q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return cand;
  }
  fail(ErrorKind::PrimeSearchExhausted, "no primitive root of unity found");
}

}  // namespace

// p > 2 sqrt(|G|), in the exact integer form p^2 > 4 |G|: character degrees
// and multiplicities are at most sqrt(|G|), so residues below p/2 lift
// uniquely.
static bool large_enough(std::uint64_t p, std::uint64_t order) { return p * p > 4 * order; }

PrimeContext choose_prime(const FiniteGroup& g, std::uint64_t search_cap, int skip) {
  const std::uint64_t e = g.exponent();
  for (std::uint64_t p = e + 1;; p += e) {
    if (p > search_cap) {
      fail(ErrorKind::PrimeSearchExhausted,
           "no admissible prime below " + std::to_string(search_cap));
    }
    if (!large_enough(p, g.size()) || !is_prime(p)) continue;
    if (skip-- > 0) continue;
    return PrimeContext{p, e, find_primitive_root_of_unity(p, e)};
  }
}

PrimeContext make_prime_context(const FiniteGroup& g, std::uint64_t p) {
  const std::uint64_t e = g.exponent();
  check(is_prime(p), ErrorKind::PrimeMismatch, "modulus is not prime");
  check((p - 1) % e == 0, ErrorKind::PrimeMismatch,
        "prime " + std::to_string(p) + " is not 1 mod the group exponent " + std::to_string(e));
  check(large_enough(p, g.size()), ErrorKind::PrimeMismatch,
        "prime too small for unique degree lifting");
  return PrimeContext{p, e, find_primitive_root_of_unity(p, e)};
}

std::vector<std::vector<std::vector<std::uint64_t>>> class_matrices(const FiniteGroup& g,
                                                                    const ConjugacyData& classes) {
  const std::size_t r = classes.count();
  std::vector<std::vector<std::vector<std::uint64_t>>> mats(
      r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
  // (M_i)_{jk} counts factorizations rep_k = x * y with x in class i,
  // y in class j; accumulate over all x at once.
  std::vector<std::size_t> rep_index(r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto idx = g.index_of(classes.class_reps[k]);
    assert(idx.has_value());
    rep_index[k] = *idx;
  }
  for (std::size_t xi = 0; xi < g.size(); ++xi) {
    const std::size_t i = classes.class_of[xi];
    const Permutation x_inv = g.element(xi).inverse();
    for (std::size_t k = 0; k < r; ++k) {
      const auto y = g.index_of(x_inv.compose(g.element(rep_index[k])));
      assert(y.has_value());
      const std::size_t j = classes.class_of[*y];
      ++mats[i][j][k];
    }
  }
  return mats;
}

namespace {

struct Subspace {
  // Row-major basis vectors spanning the subspace of F_p^r.
  std::vector<FpVec> basis;
};

// Split v into eigenspaces of the class matrix `m` (given mod p) restricted
// to v, by scanning all eigenvalue candidates in F_p.
std::vector<Subspace> split_subspace(const Subspace& v, const FpMat& m, const Fp& f) {
  const std::size_t r = m.size();
  const std::size_t d = v.basis.size();

  // Columns of bt are the basis vectors; a = m * bt, so eigenvector
  // candidates with coefficients c satisfy (a - lambda * bt) c = 0.
  FpMat bt(r, FpVec(d, 0));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < r; ++i) bt[i][j] = v.basis[j][i];
  }
  const FpMat a = fp_mat_mul(m, bt, f);

  std::vector<Subspace> out;
  std::size_t found = 0;
  for (std::uint64_t lambda = 0; lambda < f.p && found < d; ++lambda) {
    FpMat shifted(r, FpVec(d, 0));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < d; ++j) shifted[i][j] = f.sub(a[i][j], f.mul(lambda, bt[i][j]));
    }
    const auto kernel = fp_kernel_basis(shifted, f);
    if (kernel.empty()) continue;
    Subspace w;
    for (const auto& c : kernel) {
      FpVec vec(r, 0);
      for (std::size_t j = 0; j < d; ++j) {
        if (c[j] == 0) continue;
        for (std::size_t i = 0; i < r; ++i) vec[i] = f.add(vec[i], f.mul(c[j], v.basis[j][i]));
      }
      w.basis.push_back(std::move(vec));
    }
    found += w.basis.size();
    out.push_back(std::move(w));
  }
  if (found != d) {
    fail(ErrorKind::SplitFailure, "eigenspaces of a class matrix do not fill the subspace");
  }
  return out;
}

}  // namespace

CharTableModP dixon_table(const FiniteGroup& g, const ConjugacyData& classes,
                          const PrimeContext& context) {
  const Fp f{context.p};
  const std::size_t r = classes.count();
  const auto mats = class_matrices(g, classes);

  std::vector<FpMat> mats_mod(r);
  for (std::size_t i = 0; i < r; ++i) {
    FpMat m(r, FpVec(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) m[j][k] = f.reduce(mats[i][j][k]);
    }
    mats_mod[i] = std::move(m);
  }

  std::vector<Subspace> spaces;
  {
    Subspace all;
    all.basis = fp_identity(r);
    spaces.push_back(std::move(all));
  }
  for (std::size_t i = 1; i < r; ++i) {
    bool done = true;
    std::vector<Subspace> next;
    for (const auto& v : spaces) {
      if (v.basis.size() == 1) {
        next.push_back(v);
        continue;
      }
      for (auto& w : split_subspace(v, mats_mod[i], f)) {
        if (w.basis.size() > 1) done = false;
        next.push_back(std::move(w));
      }
    }
    spaces = std::move(next);
    if (done && spaces.size() == r) break;
  }
  for (const auto& v : spaces) {
    if (v.basis.size() != 1) {
      fail(ErrorKind::SplitFailure, "class matrices failed to separate all characters");
    }
  }

  const std::uint64_t order_mod = f.reduce(g.size());
  std::vector<std::uint64_t> class_size_inv(r);
  for (std::size_t k = 0; k < r; ++k) class_size_inv[k] = f.inv(f.reduce(classes.class_sizes[k]));

  struct Row {
    std::uint64_t degree;
    std::vector<std::uint64_t> values;
  };
  std::vector<Row> rows;
  rows.reserve(r);
  for (const auto& v : spaces) {
    FpVec omega_vec = v.basis[0];
    // omega_vec spans the line of (|C_k| chi(g_k) / chi(1))_k, whose
    // identity-class coordinate is 1, so coordinate 0 is invertible.
    if (omega_vec[0] == 0) {
      fail(ErrorKind::SplitFailure, "eigenvector has zero identity-class coordinate");
    }
    const std::uint64_t scale = f.inv(omega_vec[0]);
    for (auto& x : omega_vec) x = f.mul(x, scale);

    std::uint64_t c = 0;
    for (std::size_t k = 0; k < r; ++k) {
      c = f.add(c, f.mul(f.mul(omega_vec[k], omega_vec[classes.inverse_class[k]]),
                         class_size_inv[k]));
    }
    if (c == 0) fail(ErrorKind::DegreeRecoveryFailure, "degree norm sum vanished mod p");
    const std::uint64_t degree_sq = f.mul(order_mod, f.inv(c));

    // d <= floor(sqrt(|G|)) since d^2 <= |G|; two roots in that window would
    // have d1 + d2 <= 2 sqrt(|G|) < p, so the root is unique.
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= g.size(); ++d) {
      if (f.mul(d, d) == degree_sq) {
        if (degree != 0) {
          fail(ErrorKind::DegreeRecoveryFailure, "ambiguous square root for a character degree");
        }
        degree = d;
      }
    }
    if (degree == 0) {
      fail(ErrorKind::DegreeRecoveryFailure, "no character degree below sqrt(|G|)");
    }

    Row row;
    row.degree = degree;
    row.values.resize(r);
    for (std::size_t k = 0; k < r; ++k) {
      row.values[k] = f.mul(f.mul(degree, omega_vec[k]), class_size_inv[k]);
    }
    rows.push_back(std::move(row));
  }

  // Deterministic row order: trivial character first, then by degree and
  // value vector.
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    const bool ta = std::all_of(a.values.begin(), a.values.end(),
                                [](std::uint64_t x) { return x == 1; });
    const bool tb = std::all_of(b.values.begin(), b.values.end(),
                                [](std::uint64_t x) { return x == 1; });
    if (ta != tb) return ta;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.values < b.values;
  });

  CharTableModP table;
  table.context = context;
  table.group_order = g.size();
  table.classes = classes;
  table.degrees.reserve(r);
  table.values.reserve(r);
  for (auto& row : rows) {
    table.degrees.push_back(row.degree);
    table.values.push_back(std::move(row.values));
  }

  std::vector<std::string> diagnostics;
  if (!verify_table(table, &diagnostics)) {
    fail(ErrorKind::SplitFailure, "computed table failed verification: " + diagnostics.front());
  }
  return table;
}

CharTableModP dixon_table(const FiniteGroup& g) {
  const auto classes = conjugacy_classes(g);
  return dixon_table(g, classes, choose_prime(g));
}

bool verify_table(const CharTableModP& table, std::vector<std::string>* diagnostics) {
  const Fp f{table.context.p};
  const std::size_t r = table.count();
  bool ok = true;
  auto report = [&](const std::string& msg) {
    ok = false;
    if (diagnostics) diagnostics->push_back(msg);
  };

  if (r != table.classes.count()) {
    report("row count differs from class count");
    return ok;
  }

  std::uint64_t degree_sum_sq = 0;
  for (auto d : table.degrees) degree_sum_sq += d * d;
  if (degree_sum_sq != table.group_order) report("sum of squared degrees differs from group order");

  bool trivial_first = !table.values.empty();
  for (std::size_t k = 0; trivial_first && k < r; ++k) {
    trivial_first = table.values[0][k] == 1;
  }
  if (!trivial_first) report("trivial character is not the first row");

  for (std::size_t i = 0; i < r; ++i) {
    if (table.values[i][0] != f.reduce(table.degrees[i])) {
      report("degree does not match identity-class value in row " + std::to_string(i));
    }
  }

  const std::uint64_t order_mod = f.reduce(table.group_order);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < r; ++k) {
        acc = f.add(acc, f.mul(f.reduce(table.classes.class_sizes[k]),
                               f.mul(table.values[i][k],
                                     table.values[j][table.classes.inverse_class[k]])));
      }
      const std::uint64_t expect = i == j ? order_mod : 0;
      if (acc != expect) {
        report("row orthogonality fails for rows " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < r; ++i) {
        acc = f.add(acc, f.mul(table.values[i][a], table.values[i][table.classes.inverse_class[b]]));
      }
      const std::uint64_t expect =
          a == b ? f.mul(order_mod, f.inv(f.reduce(table.classes.class_sizes[a]))) : 0;
      if (acc != expect) {
        report("column orthogonality fails for classes " + std::to_string(a) + "," +
               std::to_string(b));
      }
    }
  }
  return ok;
}

}  // namespace depthlab
