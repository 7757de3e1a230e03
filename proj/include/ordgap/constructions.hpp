#pragma once

// Generators for the counterexample programs that exist over every ordered
// ring that is not a division ring, with certificates that re-verify under
// the affine checkers and, over INT, under exhaustive enumeration.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordgap/affine.hpp"
#include "ordgap/enumeration.hpp"
#include "ordgap/report.hpp"

namespace ordgap {

enum class SequenceRole { PrimalImproving, DualDecreasing };

struct WitnessSequence {
  RingId ring;
  SequenceRole role;
  std::vector<RVector> points;
  std::vector<Element> objective_values;
};

enum class BundleKind {
  Gap,
  StrongDualityGap,
  InfeasibleOptimalPrimal,  // primal infeasible, dual attains its optimum
  InfeasibleOptimalDual,    // dual infeasible, primal attains its optimum
  NonAchieving,
};

std::string_view bundle_kind_name(BundleKind k);
std::string_view sequence_role_name(SequenceRole r);

struct CounterexampleBundle {
  BundleKind kind;
  ProgramData program;
  /// Optimal or witness points, when the construction has them.
  std::optional<RVector> primal_point;
  std::optional<RVector> dual_point;
  std::optional<Element> gap;
  std::optional<WitnessSequence> sequence;
  /// Re-verification results; all must be ok().
  std::vector<CheckReport> checks;
  /// Analytic arguments and claims that are recorded rather than checked.
  std::vector<std::string> notes;

  bool verified() const;
};

/// The 1x1 program A=[a], b=[1], c=[1], d=0 over a positive non-unit a.
ProgramData gap_program_data(const Element& a);

/// Gap program with a spot check that every feasible pair found has a
/// strictly positive gap: exhaustive pairs of a box for enumerable rings,
/// seeded samples plus the canonical points 0 and 1 otherwise.
/// Throws NotAPositiveNonUnit.
CounterexampleBundle gap_program(RingId ring, const Element& a, std::uint64_t seed = 1);

/// Gap program over a ring with a smallest positive element, with the
/// optimal pair x* = [0], y* = [1] certified by enumeration.
/// Throws NoSmallestPositive, NotAPositiveNonUnit.
CounterexampleBundle strong_duality_counterexample(RingId ring, const Element& a);

enum class InfeasibleSide { PrimalInfeasible, DualInfeasible };

/// PrimalInfeasible: A=[[a],[-a]], b=[1,-1], c=[0], d=0, so the primal needs
/// a*v = 1 while the dual attains 0 at y=(0,0). DualInfeasible is the
/// transpose with b and c swapped. Throws NotAPositiveNonUnit.
CounterexampleBundle infeasible_optimal_program(RingId ring, const Element& a, InfeasibleSide side);

/// x + z*(1 - a*x). Requires 0 < z, 0 < a*z < 1, x >= 0 and a*x < 1; then
/// 1 - a*x' = (1 - a*z)(1 - a*x) > 0 and x' - x = z*(1 - a*x) > 0.
/// Throws PreconditionViolated naming the failed test.
Element primal_improving_step(const Element& a, const Element& z, const Element& x);

/// y_j * p for every j, re-validated for dual feasibility. Requires
/// 0 < p < 1 and y dual feasible with positive entries. Throws
/// PreconditionViolated or StepLosesFeasibility.
RVector dual_decreasing_step(const ProgramData& p, const RVector& y, const Element& factor);

/// Points x_0 = 0, x_1, ..., x_steps of the improving step on the gap
/// program of a, each verified feasible with strictly increasing f.
WitnessSequence primal_improving_sequence(const Element& a, const Element& z, std::size_t steps);

/// Points y_0, ..., y_steps of the decreasing step, each verified dual
/// feasible with strictly decreasing g.
WitnessSequence dual_decreasing_sequence(const ProgramData& p, const RVector& y0,
                                         const Element& factor, std::size_t steps);

/// Primal side of the non-achieving construction: gap program of a with a
/// strictly improving feasible sequence. Requires a positive non-unit a.
CounterexampleBundle non_achieving_primal(const Element& a, const Element& z, std::size_t steps);
/// Dual side: gap program of a with a strictly decreasing feasible sequence
/// from y = [1], bounded below by 0 through weak duality against x = [0].
CounterexampleBundle non_achieving_dual(const Element& a, const Element& factor,
                                        std::size_t steps);

/// No central z lies strictly between ab and ba (oriented so ab <= ba).
/// Throws PreconditionViolated unless a, b > 0 and z is central.
CheckReport no_central_between_check(const Element& a, const Element& b, const Element& z);

/// With ab <= ba and ab finite, ba - ab is zero or infinitesimal; Vacuous
/// when ab is not finite. Throws PreconditionViolated unless a, b > 0.
CheckReport magnitude_gap_check(const Element& a, const Element& b);

/// Default witnesses: a = 2 over INT/ODDRAT/RAT, a = x over POLY/SKEW.
Element default_nonunit(RingId ring);

}  // namespace ordgap
