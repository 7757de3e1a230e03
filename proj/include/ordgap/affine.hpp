#pragma once

// Primal-dual affine programs over an ordered ring:
//
//   primal  maximize f(x) = c.x - d   subject to  A x <= b,   x >= 0
//   dual    minimize g(y) = y.b - d   subject to  y A >= c,   y >= 0
//
// All inequalities are componentwise and non-strict. Products keep the
// linalg side convention: A on the left of x, y on the left of A, and in
// the slack sums s on the left of x and y on the left of t.

#include <cstddef>
#include <optional>

#include "ordgap/linalg.hpp"
#include "ordgap/report.hpp"

namespace ordgap {

class ProgramData {
 public:
  /// A is m x n, b has length m, c has length n. Throws DimensionMismatch
  /// or RingMismatch.
  ProgramData(RMatrix a, RVector b, RVector c, Element d);

  RingId ring() const noexcept { return a_.ring(); }
  std::size_t rows() const noexcept { return a_.rows(); }
  std::size_t cols() const noexcept { return a_.cols(); }
  const RMatrix& a() const noexcept { return a_; }
  const RVector& b() const noexcept { return b_; }
  const RVector& c() const noexcept { return c_; }
  const Element& d() const noexcept { return d_; }

  friend bool operator==(const ProgramData&, const ProgramData&) = default;

 private:
  RMatrix a_;
  RVector b_;
  RVector c_;
  Element d_;
};

struct SlackPair {
  RVector t;  // b - A x
  RVector s;  // y A - c
};

enum class ViolationKind { NegativeVariable, SlackNegative };

struct FeasibilityVerdict {
  bool feasible = true;
  /// 0-based index of the offending variable or constraint row.
  std::optional<std::size_t> violated_row;
  std::optional<ViolationKind> violation_kind;
};

RVector primal_slack(const ProgramData& p, const RVector& x);
RVector dual_slack(const ProgramData& p, const RVector& y);
SlackPair slacks(const ProgramData& p, const RVector& x, const RVector& y);

/// Variables are checked before slacks; the first violation is reported.
FeasibilityVerdict is_primal_feasible(const ProgramData& p, const RVector& x);
FeasibilityVerdict is_dual_feasible(const ProgramData& p, const RVector& y);

Element eval_f(const ProgramData& p, const RVector& x);
Element eval_g(const ProgramData& p, const RVector& y);

/// [s.x - g(y)] - [y.(-t) - f(x)]; identically zero for every x, y.
Element key_equation_residual(const ProgramData& p, const RVector& x, const RVector& y);
/// [g(y) - f(x)] - [s.x + y.t]; identically zero for every x, y.
Element duality_equation_residual(const ProgramData& p, const RVector& x, const RVector& y);

/// g(y) - f(x)
Element gap(const ProgramData& p, const RVector& x, const RVector& y);

/// For a feasible pair, asserts gap >= 0 and gap = s.x + y.t. Infeasible
/// inputs yield NotApplicable. A Violation means the arithmetic is broken.
CheckReport assert_weak_duality(const ProgramData& p, const RVector& x, const RVector& y);

}  // namespace ordgap
