#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "depthlab/group.hpp"
#include "depthlab/modp.hpp"

namespace depthlab {

inline constexpr std::uint64_t kDefaultPrimeSearchCap = 10000000;

// Modulus for exact character arithmetic: p = 1 (mod e) so that F_p contains
// a primitive e-th root of unity, and p > 2*ceil(sqrt(|G|)) so that integer
// character degrees and multiplicities lift uniquely from their residues.
struct PrimeContext {
  std::uint64_t p = 0;
  std::uint64_t exponent = 0;
  std::uint64_t omega = 0;  // fixed primitive exponent-th root of unity mod p
};

// All irreducible characters of a finite group, with values stored as
// residues mod p (the image of the true table under one fixed ring
// homomorphism determined by a root-of-unity choice), plus the true integer
// degrees.  Rows are normalized: trivial character first, then sorted by
// (degree, values); columns follow the deterministic class order of
// ConjugacyData.
struct CharTableModP {
  PrimeContext context;
  std::uint64_t group_order = 0;
  std::vector<std::vector<std::uint64_t>> values;  // r x r, rows = characters
  std::vector<std::uint64_t> degrees;              // true integer degrees
  ConjugacyData classes;

  std::size_t count() const { return values.size(); }
};

std::uint64_t ceil_isqrt(std::uint64_t n);  // least k with k*k >= n
bool is_prime(std::uint64_t n);

// Smallest admissible prime for g, skipping `skip` admissible candidates
// (skip > 0 is used to revalidate results under an independent prime).
PrimeContext choose_prime(const FiniteGroup& g, std::uint64_t search_cap = kDefaultPrimeSearchCap,
                          int skip = 0);

// Context with a caller-supplied prime (e.g. the overgroup's prime reused for
// a subgroup table).  Validates p = 1 (mod exponent) and the size bound.
PrimeContext make_prime_context(const FiniteGroup& g, std::uint64_t p);

// Class matrices M_i with (M_i)_{jk} = #{ x in class i : x^-1 * rep_k in
// class j }, the structure constants of class sums acting on the center.
std::vector<std::vector<std::vector<std::uint64_t>>> class_matrices(const FiniteGroup& g,
                                                                    const ConjugacyData& classes);

// Dixon-Schneider: common eigenvectors of the class matrices over F_p by
// iterative eigenspace splitting, degrees recovered from the orthogonality
// relation and the unique square root below ceil(sqrt(|G|)).
CharTableModP dixon_table(const FiniteGroup& g, const ConjugacyData& classes,
                          const PrimeContext& context);
CharTableModP dixon_table(const FiniteGroup& g);

// Orthogonality, degree-sum and trivial-row checks; appends human-readable
// diagnostics for each failure when a sink is given.
bool verify_table(const CharTableModP& table, std::vector<std::string>* diagnostics = nullptr);

}  // namespace depthlab
