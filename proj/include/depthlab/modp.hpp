#pragma once

#include <cstdint>
#include <vector>

namespace depthlab {

// Arithmetic in F_p for a word-sized prime p (the pipeline keeps p < 2^31,
// so products fit in 64 bits without reduction tricks).
struct Fp {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t reduce(std::uint64_t a) const { return a % p; }

  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;  // a != 0 mod p
};

using FpVec = std::vector<std::uint64_t>;
using FpMat = std::vector<FpVec>;  // row-major, rectangular

FpMat fp_identity(std::size_t n);
FpVec fp_mat_vec(const FpMat& a, const FpVec& v, const Fp& f);
FpMat fp_mat_mul(const FpMat& a, const FpMat& b, const Fp& f);

// Basis of { x : a x = 0 } for a rows x cols matrix a over F_p.  The basis
// vectors live in F_p^cols.  Gaussian elimination; deterministic pivoting.
std::vector<FpVec> fp_kernel_basis(FpMat a, const Fp& f);

}  // namespace depthlab
