#include "ordgap/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordgap/errors.hpp"
#include "ordgap/sampler.hpp"

namespace ordgap {

std::string_view bundle_kind_name(BundleKind k) {
  switch (k) {
    case BundleKind::Gap: return "GAP";
    case BundleKind::StrongDualityGap: return "STRONG_DUALITY_GAP";
    case BundleKind::InfeasibleOptimalPrimal: return "INFEASIBLE_OPTIMAL_PRIMAL";
    case BundleKind::InfeasibleOptimalDual: return "INFEASIBLE_OPTIMAL_DUAL";
    case BundleKind::NonAchieving: return "NON_ACHIEVING";
  }
  return "?";
}

std::string_view sequence_role_name(SequenceRole r) {
  return r == SequenceRole::PrimalImproving ? "PRIMAL_IMPROVING" : "DUAL_DECREASING";
}

bool CounterexampleBundle::verified() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.ok(); });
}

Element default_nonunit(RingId ring) {
  if (ring == RingId::Poly) return Element::poly_x();
  if (ring == RingId::Skew) return Element::skew_x();
  return Element::constant(ring, Rational(2));
}

namespace {

// Candidate box for spot checks over the enumerable rings.
const BoxSpec kSpotBox{.bound = 10, .denominator_bound = 5};
const BoxSpec kCertifyBox{.bound = 10};
constexpr std::size_t kSpotSamples = 200;

void require_positive_nonunit(const Element& a) {
  if (sign(a) != 1 || try_invert(a)) {
    throw NotAPositiveNonUnit(to_string(a) + " is not a positive non-unit of " +
                              std::string(ring_name(a.ring())));
  }
}

RVector scalar(const Element& e) { return RVector(e.ring(), {e}); }

// Nonnegative candidates for a single variable: a box for enumerable rings,
// otherwise 0, 1, a and seeded samples.
std::vector<Element> spot_candidates(const Element& a, std::uint64_t seed) {
  const RingId ring = a.ring();
  if (is_enumerable(ring)) return box_values(ring, kSpotBox);
  std::vector<Element> out{Element::zero(ring), Element::one(ring), a};
  Lcg64 rng(seed);
  for (std::size_t i = 0; i < kSpotSamples; ++i) out.push_back(sample_nonneg(ring, rng));
  return out;
}

void check_sequence(const WitnessSequence& seq) {
  for (std::size_t k = 1; k < seq.objective_values.size(); ++k) {
    const auto cmp = compare(seq.objective_values[k], seq.objective_values[k - 1]);
    const bool monotone = seq.role == SequenceRole::PrimalImproving ? cmp > 0 : cmp < 0;
    if (!monotone) throw std::logic_error("witness sequence is not strictly monotone");
  }
}

CheckReport sequence_report(const WitnessSequence& seq, const ProgramData& p) {
  CheckReport report{.check = std::string(sequence_role_name(seq.role)) + " sequence"};
  report.add("points", std::to_string(seq.points.size()));
  for (std::size_t k = 0; k < seq.points.size(); ++k) {
    const bool feasible = seq.role == SequenceRole::PrimalImproving
                              ? is_primal_feasible(p, seq.points[k]).feasible
                              : is_dual_feasible(p, seq.points[k]).feasible;
    if (!feasible) {
      report.verdict = Verdict::Violation;
      report.notes.push_back("point " + std::to_string(k) + " is infeasible");
    }
    if (k > 0) {
      const auto cmp = compare(seq.objective_values[k], seq.objective_values[k - 1]);
      const bool monotone = seq.role == SequenceRole::PrimalImproving ? cmp > 0 : cmp < 0;
      if (!monotone) {
        report.verdict = Verdict::Violation;
        report.notes.push_back("objective not strictly monotone at step " + std::to_string(k));
      }
    }
  }
  if (!seq.objective_values.empty()) {
    report.add("first value", seq.objective_values.front());
    report.add("last value", seq.objective_values.back());
  }
  return report;
}

}  // namespace

ProgramData gap_program_data(const Element& a) {
  const RingId ring = a.ring();
  return ProgramData(RMatrix(ring, 1, 1, {a}), scalar(Element::one(ring)),
                     scalar(Element::one(ring)), Element::zero(ring));
}

CounterexampleBundle gap_program(RingId ring, const Element& a, std::uint64_t seed) {
  if (a.ring() != ring) throw RingMismatch("a is not an element of " + std::string(ring_name(ring)));
  require_positive_nonunit(a);
  CounterexampleBundle bundle{.kind = BundleKind::Gap, .program = gap_program_data(a)};
  const ProgramData& p = bundle.program;

  const std::vector<Element> candidates = spot_candidates(a, seed);
  std::vector<RVector> primal_feasible;
  std::vector<RVector> dual_feasible;
  for (const Element& v : candidates) {
    if (is_primal_feasible(p, scalar(v)).feasible) primal_feasible.push_back(scalar(v));
    if (is_dual_feasible(p, scalar(v)).feasible) dual_feasible.push_back(scalar(v));
  }

  CheckReport claim{.check = "every feasible pair has a positive gap"};
  claim.add("candidates", std::to_string(candidates.size()));
  claim.add("primal feasible", std::to_string(primal_feasible.size()));
  claim.add("dual feasible", std::to_string(dual_feasible.size()));
  std::size_t pairs = 0;
  for (const RVector& x : primal_feasible) {
    for (const RVector& y : dual_feasible) {
      ++pairs;
      if (sign(gap(p, x, y)) != 1) {
        claim.verdict = Verdict::Violation;
        claim.notes.push_back("gap " + to_string(gap(p, x, y)) + " at x=" + to_string(x) +
                              ", y=" + to_string(y));
      }
    }
  }
  claim.add("pairs checked", std::to_string(pairs));
  if (pairs == 0) claim.verdict = Verdict::Vacuous;
  claim.notes.push_back(is_enumerable(ring) ? "spot check over the box [0,10] with denominators <= 5"
                                            : "spot check over 0, 1, a and seeded samples");

  if (!primal_feasible.empty()) bundle.primal_point = primal_feasible.front();
  if (!dual_feasible.empty()) bundle.dual_point = dual_feasible.front();
  if (bundle.primal_point && bundle.dual_point) {
    bundle.gap = gap(p, *bundle.primal_point, *bundle.dual_point);
    bundle.checks.push_back(assert_weak_duality(p, *bundle.primal_point, *bundle.dual_point));
  }
  bundle.checks.push_back(std::move(claim));
  bundle.notes.push_back(
      "x = y feasible would give a*x <= 1 <= x*a; with 1 central and a a non-unit this is "
      "impossible, so feasible x and y always differ");
  return bundle;
}

CounterexampleBundle strong_duality_counterexample(RingId ring, const Element& a) {
  if (a.ring() != ring) throw RingMismatch("a is not an element of " + std::string(ring_name(ring)));
  require_positive_nonunit(a);
  const RingDescriptor desc = describe(ring);
  if (!desc.smallest_positive) {
    throw NoSmallestPositive(std::string(ring_name(ring)) + " has no smallest positive element");
  }
  CounterexampleBundle bundle{.kind = BundleKind::StrongDualityGap,
                              .program = gap_program_data(a)};
  const ProgramData& p = bundle.program;
  bundle.primal_point = scalar(Element::zero(ring));
  bundle.dual_point = scalar(Element::one(ring));
  bundle.gap = gap(p, *bundle.primal_point, *bundle.dual_point);
  bundle.checks.push_back(
      certify_optimal_pair(p, bundle.primal_point, bundle.dual_point, kCertifyBox));
  bundle.checks.push_back(assert_weak_duality(p, *bundle.primal_point, *bundle.dual_point));
  bundle.notes.push_back(
      "1 is the smallest positive element, so 0 < a*x < 1 has no solution: x = 0 is the only "
      "feasible primal point and y = 1 the least feasible dual point");
  return bundle;
}

CounterexampleBundle infeasible_optimal_program(RingId ring, const Element& a, InfeasibleSide side) {
  if (a.ring() != ring) throw RingMismatch("a is not an element of " + std::string(ring_name(ring)));
  require_positive_nonunit(a);
  const Element zero = Element::zero(ring);
  const Element one = Element::one(ring);
  const bool primal_infeasible = side == InfeasibleSide::PrimalInfeasible;

  ProgramData program =
      primal_infeasible
          ? ProgramData(RMatrix(ring, 2, 1, {a, -a}), RVector(ring, {one, -one}),
                        RVector(ring, {zero}), zero)
          : ProgramData(RMatrix(ring, 1, 2, {a, -a}), RVector(ring, {zero}),
                        RVector(ring, {one, -one}), zero);
  CounterexampleBundle bundle{.kind = primal_infeasible ? BundleKind::InfeasibleOptimalPrimal
                                                        : BundleKind::InfeasibleOptimalDual,
                              .program = std::move(program)};
  const ProgramData& p = bundle.program;
  const RVector origin = RVector::zeros(ring, 2);

  CheckReport optimum{.check = primal_infeasible ? "dual optimum at (0, 0)"
                                                 : "primal optimum at (0, 0)"};
  const bool origin_feasible = primal_infeasible ? is_dual_feasible(p, origin).feasible
                                                 : is_primal_feasible(p, origin).feasible;
  optimum.add("value", primal_infeasible ? eval_g(p, origin) : eval_f(p, origin));
  if (!origin_feasible) {
    optimum.verdict = Verdict::Violation;
    optimum.notes.push_back("(0, 0) is not feasible");
  }

  CheckReport infeasible{.check = primal_infeasible ? "primal has no feasible point"
                                                    : "dual has no feasible point"};

  if (is_enumerable(ring)) {
    const BoxSpec box = kSpotBox;
    const EdtClassification edt = classify_edt(p, box);
    const ProgramStatus& empty_side = primal_infeasible ? edt.primal : edt.dual;
    const ProgramStatus& optimal_side = primal_infeasible ? edt.dual : edt.primal;
    infeasible.add("status", empty_side.summary());
    if (empty_side.kind != StatusKind::Infeasible) {
      infeasible.verdict = Verdict::Violation;
      infeasible.notes.push_back("enumeration found a feasible point");
    }
    optimum.add("enumeration", optimal_side.summary());
    if (optimal_side.kind != StatusKind::Optimal || !optimal_side.witness ||
        *optimal_side.witness != origin) {
      optimum.verdict = Verdict::Violation;
      optimum.notes.push_back("enumeration disagrees with the optimum (0, 0)");
    }
    CheckReport edt_check{.check = "Existence-Duality classification"};
    edt_check.add("classification", edt.details);
    edt_check.verdict = edt.violation() ? Verdict::Pass : Verdict::Violation;
    edt_check.notes.push_back("expected: the joint status is none of the four classical cases");
    bundle.checks.push_back(std::move(edt_check));
  } else {
    Lcg64 rng(7);
    std::size_t tried = 0;
    for (std::size_t i = 0; i < kSpotSamples; ++i) {
      RVector v = RVector(ring, {sample_nonneg(ring, rng), sample_nonneg(ring, rng)});
      ++tried;
      if (primal_infeasible) {
        if (is_primal_feasible(p, RVector(ring, {v[0]})).feasible) {
          infeasible.verdict = Verdict::Violation;
          infeasible.notes.push_back("sampled primal point " + to_string(v[0]) + " is feasible");
        }
        if (is_dual_feasible(p, v).feasible && sign(eval_g(p, v)) < 0) {
          optimum.verdict = Verdict::Violation;
          optimum.notes.push_back("sampled dual point " + to_string(v) + " beats (0, 0)");
        }
      } else {
        if (is_dual_feasible(p, RVector(ring, {v[0]})).feasible) {
          infeasible.verdict = Verdict::Violation;
          infeasible.notes.push_back("sampled dual point " + to_string(v[0]) + " is feasible");
        }
        if (is_primal_feasible(p, v).feasible && sign(eval_f(p, v)) > 0) {
          optimum.verdict = Verdict::Violation;
          optimum.notes.push_back("sampled primal point " + to_string(v) + " beats (0, 0)");
        }
      }
    }
    infeasible.add("samples", std::to_string(tried));
    optimum.add("samples", std::to_string(tried));
  }

  if (primal_infeasible) {
    bundle.dual_point = origin;
    bundle.notes.push_back(
        "primal feasibility forces a*v = 1; ordered rings have no zero divisors, so v*a = 1 "
        "as well and a would be a unit");
    bundle.notes.push_back(
        "g(y) = y1 - y2 and the dual constraint (y1 - y2)*a >= 0 with a > 0 force y1 - y2 >= 0, "
        "so (0, 0) is optimal with value 0");
  } else {
    bundle.primal_point = origin;
    bundle.notes.push_back(
        "dual feasibility forces y*a = 1; ordered rings have no zero divisors, so a*y = 1 "
        "as well and a would be a unit");
    bundle.notes.push_back(
        "f(x) = x1 - x2 and the primal constraint a*(x1 - x2) <= 0 with a > 0 force "
        "x1 - x2 <= 0, so (0, 0) is optimal with value 0");
  }
  bundle.checks.push_back(std::move(infeasible));
  bundle.checks.push_back(std::move(optimum));
  return bundle;
}

Element primal_improving_step(const Element& a, const Element& z, const Element& x) {
  const Element one = Element::one(a.ring());
  if (sign(z) != 1) throw PreconditionViolated("improving step needs z > 0");
  if (sign(a * z) != 1 || sign(one - a * z) != 1) {
    throw PreconditionViolated("improving step needs 0 < a*z < 1");
  }
  if (sign(x) < 0) throw PreconditionViolated("improving step needs x >= 0");
  if (sign(one - a * x) != 1) throw PreconditionViolated("improving step needs a*x < 1");
  return x + z * (one - a * x);
}

RVector dual_decreasing_step(const ProgramData& p, const RVector& y, const Element& factor) {
  const Element one = Element::one(p.ring());
  if (sign(factor) != 1 || sign(one - factor) != 1) {
    throw PreconditionViolated("decreasing step needs 0 < p < 1, got p = " + to_string(factor));
  }
  for (const Element& e : y) {
    if (sign(e) != 1) throw PreconditionViolated("decreasing step needs y > 0 componentwise");
  }
  if (!is_dual_feasible(p, y).feasible) {
    throw PreconditionViolated("decreasing step needs a dual feasible y");
  }
  std::vector<Element> scaled;
  scaled.reserve(y.size());
  for (const Element& e : y) scaled.push_back(e * factor);
  RVector next(p.ring(), std::move(scaled));
  const FeasibilityVerdict verdict = is_dual_feasible(p, next);
  if (!verdict.feasible) {
    throw StepLosesFeasibility("y*p = " + to_string(next) + " violates dual row " +
                                   std::to_string(*verdict.violated_row + 1),
                               *verdict.violated_row);
  }
  return next;
}

WitnessSequence primal_improving_sequence(const Element& a, const Element& z, std::size_t steps) {
  const ProgramData p = gap_program_data(a);
  WitnessSequence seq{.ring = a.ring(), .role = SequenceRole::PrimalImproving};
  Element x = Element::zero(a.ring());
  for (std::size_t k = 0;; ++k) {
    const RVector point = scalar(x);
    if (!is_primal_feasible(p, point).feasible) {
      throw std::logic_error("improving step left the feasible region");
    }
    seq.points.push_back(point);
    seq.objective_values.push_back(eval_f(p, point));
    if (k == steps) break;
    x = primal_improving_step(a, z, x);
  }
  check_sequence(seq);
  return seq;
}

WitnessSequence dual_decreasing_sequence(const ProgramData& p, const RVector& y0,
                                         const Element& factor, std::size_t steps) {
  WitnessSequence seq{.ring = p.ring(), .role = SequenceRole::DualDecreasing};
  RVector y = y0;
  if (!is_dual_feasible(p, y).feasible) throw PreconditionViolated("y0 is not dual feasible");
  for (std::size_t k = 0;; ++k) {
    seq.points.push_back(y);
    seq.objective_values.push_back(eval_g(p, y));
    if (k == steps) break;
    y = dual_decreasing_step(p, y, factor);
  }
  check_sequence(seq);
  return seq;
}

CounterexampleBundle non_achieving_primal(const Element& a, const Element& z, std::size_t steps) {
  require_positive_nonunit(a);
  CounterexampleBundle bundle{.kind = BundleKind::NonAchieving, .program = gap_program_data(a)};
  const ProgramData& p = bundle.program;
  const Element one = Element::one(a.ring());
  bundle.sequence = primal_improving_sequence(a, z, steps);
  bundle.checks.push_back(sequence_report(*bundle.sequence, p));

  CheckReport factor{.check = "1 - a*x' = (1 - a*z)(1 - a*x) at every step"};
  const auto& pts = bundle.sequence->points;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const Element lhs = one - a * pts[k][0];
    const Element rhs = (one - a * z) * (one - a * pts[k - 1][0]);
    if (lhs != rhs) {
      factor.verdict = Verdict::Violation;
      factor.notes.push_back("factorization fails at step " + std::to_string(k));
    }
  }
  factor.add("steps", std::to_string(pts.size() - 1));
  bundle.checks.push_back(std::move(factor));

  const RVector y_one = scalar(one);
  if (is_dual_feasible(p, y_one).feasible) {
    bundle.dual_point = y_one;
    CheckReport bound{.check = "objective bounded above by g([1])"};
    bound.add("bound", eval_g(p, y_one));
    for (const RVector& x : pts) {
      const CheckReport wd = assert_weak_duality(p, x, y_one);
      if (!wd.ok()) {
        bound.verdict = Verdict::Violation;
        bound.notes.push_back("weak duality fails at x=" + to_string(x));
      }
    }
    bundle.checks.push_back(std::move(bound));
  }
  bundle.notes.push_back(
      "a feasible x with a*x = 1 would make a a unit, so every feasible x has 1 - a*x > 0 and "
      "the improving step applies: no feasible x is optimal");
  return bundle;
}

CounterexampleBundle non_achieving_dual(const Element& a, const Element& factor,
                                        std::size_t steps) {
  require_positive_nonunit(a);
  CounterexampleBundle bundle{.kind = BundleKind::NonAchieving, .program = gap_program_data(a)};
  const ProgramData& p = bundle.program;
  const RingId ring = a.ring();
  const RVector y0 = scalar(Element::one(ring));
  bundle.sequence = dual_decreasing_sequence(p, y0, factor, steps);
  bundle.checks.push_back(sequence_report(*bundle.sequence, p));

  const RVector x_zero = scalar(Element::zero(ring));
  bundle.primal_point = x_zero;
  CheckReport bound{.check = "objective bounded below by f([0])"};
  bound.add("bound", eval_f(p, x_zero));
  for (const RVector& y : bundle.sequence->points) {
    const CheckReport wd = assert_weak_duality(p, x_zero, y);
    if (!wd.ok() || wd.verdict == Verdict::NotApplicable) {
      bound.verdict = Verdict::Violation;
      bound.notes.push_back("weak duality check failed at y=" + to_string(y));
    }
  }
  bundle.checks.push_back(std::move(bound));
  bundle.notes.push_back("each step's dual feasibility is re-validated exactly; only the lower "
                         "bound 0 from weak duality is certified");
  return bundle;
}

CheckReport no_central_between_check(const Element& a, const Element& b, const Element& z) {
  if (sign(a) != 1 || sign(b) != 1) throw PreconditionViolated("a and b must be positive");
  if (!is_central(z)) throw PreconditionViolated(to_string(z) + " is not central");
  Element low = a * b;
  Element high = b * a;
  if (compare(low, high) > 0) std::swap(low, high);

  CheckReport report{.check = "no central element strictly between ab and ba"};
  report.add("ab", low);
  report.add("ba", high);
  report.add("z", z);
  const bool above_low = compare(low, z) < 0;
  const bool below_high = compare(z, high) < 0;
  report.add("ab < z", above_low ? "true" : "false");
  report.add("z < ba", below_high ? "true" : "false");
  if (low == high) report.notes.push_back("ab = ba: the open interval is empty");
  if (above_low && below_high) report.verdict = Verdict::Violation;
  return report;
}

CheckReport magnitude_gap_check(const Element& a, const Element& b) {
  if (sign(a) != 1 || sign(b) != 1) throw PreconditionViolated("a and b must be positive");
  Element low = a * b;
  Element high = b * a;
  if (compare(low, high) > 0) std::swap(low, high);

  CheckReport report{.check = "ba - ab is zero or infinitesimal when ab is finite"};
  const Magnitude low_mag = classify_magnitude(low);
  report.add("ab", low);
  report.add("ba", high);
  report.add("magnitude(ab)", std::string(magnitude_name(low_mag)));
  if (low_mag != Magnitude::Finite) {
    report.verdict = Verdict::Vacuous;
    report.notes.push_back("hypothesis not met: ab is not finite");
    return report;
  }
  const Magnitude diff_mag = classify_magnitude(high - low);
  report.add("magnitude(ba - ab)", std::string(magnitude_name(diff_mag)));
  if (diff_mag != Magnitude::Zero && diff_mag != Magnitude::Infinitesimal) {
    report.verdict = Verdict::Violation;
  }
  return report;
}

}  // namespace ordgap
