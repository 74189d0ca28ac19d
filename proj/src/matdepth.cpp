#include "depthlab/matdepth.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "depthlab/errors.hpp"

namespace depthlab {

namespace {

void require_irredundant(const NonnegMatrix& m) {
  if (!irredundant(m)) {
    fail(ErrorKind::NotIrredundant, "matrix has a zero row or zero column");
  }
}

// Least n >= 0 with support(X^n) = support(X^(n+1)), X square with X^0 = I.
// Supports nest when X has a fully nonzero diagonal, which S = M M^T and
// T = M^T M both have for irredundant M, so the first equality is final.
int support_stabilization_exponent(const SupportMatrix& x) {
  const std::size_t n = x.rows();
  const int bound = static_cast<int>(2 * (x.rows() + x.cols()) + 1);
  SupportMatrix prev = SupportMatrix::identity(n);
  SupportMatrix cur = x;
  for (int e = 0; e <= bound; ++e) {
    if (prev == cur) return e;
    prev = cur;
    cur = cur * x;
  }
  throw std::logic_error("support power stabilization exceeded the diameter bound");
}

}  // namespace

bool irredundant(const NonnegMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool hit = false;
    for (std::size_t j = 0; j < m.cols() && !hit; ++j) hit = m.at(i, j) != 0;
    if (!hit) return false;
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool hit = false;
    for (std::size_t i = 0; i < m.rows() && !hit; ++i) hit = m.at(i, j) != 0;
    if (!hit) return false;
  }
  return true;
}

NonnegMatrix alternating_power(const NonnegMatrix& m, int power) {
  if (power < 0) throw std::invalid_argument("alternating power must be nonnegative");
  if (power == 0) return NonnegMatrix::identity(m.rows());
  if (power == 1) return m;
  const NonnegMatrix s = m * m.transpose();
  NonnegMatrix acc = s;
  for (int k = 1; k < power / 2; ++k) acc = acc * s;
  if (power % 2 == 0) return acc;
  return acc * m;
}

int min_depth(const NonnegMatrix& m) {
  require_irredundant(m);
  const SupportMatrix mb = m.support();
  const SupportMatrix sb = mb * m.transpose().support();
  const int bound = static_cast<int>(2 * (m.rows() + m.cols()) + 1);

  // Two interleaved chains: even powers (r x r, starting at I) are compared
  // at odd m, odd powers (r x s, starting at M) at even m, using
  // M^(m+1) = S * M^(m-1).
  SupportMatrix even_prev = SupportMatrix::identity(m.rows());
  SupportMatrix odd_prev = mb;
  for (int depth = 1; depth <= bound; ++depth) {
    if (depth % 2 == 1) {
      SupportMatrix next = sb * even_prev;
      if (next == even_prev) return depth;
      even_prev = std::move(next);
    } else {
      SupportMatrix next = sb * odd_prev;
      if (next == odd_prev) return depth;
      odd_prev = std::move(next);
    }
  }
  throw std::logic_error("depth search exceeded the diameter bound");
}

int min_odd_depth(const NonnegMatrix& m) {
  require_irredundant(m);
  const SupportMatrix sb = m.support() * m.transpose().support();
  return 2 * support_stabilization_exponent(sb) + 1;
}

int min_h_depth(const NonnegMatrix& m) {
  require_irredundant(m);
  const SupportMatrix tb = m.transpose().support() * m.support();
  return 2 * support_stabilization_exponent(tb) + 1;
}

int module_depth_q(const NonnegMatrix& m) {
  return (min_h_depth(m) - 1) / 2;
}

DepthReport depth_report(const NonnegMatrix& m) {
  require_irredundant(m);
  DepthReport report{.min_depth = 0,
                     .min_odd_depth = 0,
                     .min_h_depth = 0,
                     .module_depth_q = 0,
                     .s_exponent = 0,
                     .t_exponent = 0,
                     .s = m * m.transpose(),
                     .t = m.transpose() * m};
  report.min_depth = min_depth(m);
  report.s_exponent = support_stabilization_exponent(report.s.support());
  report.min_odd_depth = 2 * report.s_exponent + 1;
  report.t_exponent = support_stabilization_exponent(report.t.support());
  report.min_h_depth = 2 * report.t_exponent + 1;
  report.module_depth_q = report.t_exponent;
  assert(report.min_odd_depth == report.min_depth || report.min_odd_depth == report.min_depth + 1);
  return report;
}

}  // namespace depthlab
