#include <doctest.h>

#include "ordgap/constructions.hpp"
#include "ordgap/errors.hpp"
#include "ordgap/sampler.hpp"
#include "support.hpp"

using namespace ordgap;
using testsupport::I;
using testsupport::K;
using testsupport::Q;

namespace {

const Element kPx = Element::poly_x();
const Element kX = Element::skew_x();
const Element kY = Element::skew_y();

Element odd(long n, long d = 1) { return Element::constant(RingId::OddRat, Rational(n, d)); }
Element pc(long n, long d = 1) { return Element::constant(RingId::Poly, Rational(n, d)); }
RVector iv(std::initializer_list<Element> e) { return RVector(RingId::Int, e); }

void require_bundle_certificates(const CounterexampleBundle& b) {
  CHECK(b.verified());
  if (b.primal_point) CHECK(is_primal_feasible(b.program, *b.primal_point).feasible);
  if (b.dual_point) CHECK(is_dual_feasible(b.program, *b.dual_point).feasible);
  if (b.primal_point && b.dual_point && b.gap) {
    CHECK(gap(b.program, *b.primal_point, *b.dual_point) == *b.gap);
  }
}

}  // namespace

TEST_CASE("gap program over the integers") {
  const CounterexampleBundle b = gap_program(RingId::Int, I(2));
  CHECK(b.kind == BundleKind::Gap);
  CHECK(b.program == ProgramData(RMatrix(RingId::Int, 1, 1, {I(2)}), iv({I(1)}), iv({I(1)}), I(0)));
  require_bundle_certificates(b);
  CHECK_THROWS_AS(gap_program(RingId::Rat, Q(2)), NotAPositiveNonUnit);
  CHECK_THROWS_AS(gap_program(RingId::Int, I(-2)), NotAPositiveNonUnit);
  CHECK_THROWS_AS(gap_program(RingId::Int, I(1)), NotAPositiveNonUnit);
}

TEST_CASE("gap program over POLY admits only x = 0") {
  const CounterexampleBundle b = gap_program(RingId::Poly, kPx);
  require_bundle_certificates(b);
  const ProgramData& p = b.program;
  Lcg64 rng(4);
  for (int k = 0; k < 300; ++k) {
    const Element v = sample_nonneg(RingId::Poly, rng);
    const bool feasible = is_primal_feasible(p, RVector(RingId::Poly, {v})).feasible;
    CHECK(feasible == v.is_zero());
    if (!v.is_zero()) CHECK(kPx * v > Element::one(RingId::Poly));
  }
}

TEST_CASE("gap program over SKEW") {
  const CounterexampleBundle b = gap_program(RingId::Skew, kX);
  require_bundle_certificates(b);
  CHECK(is_dual_feasible(b.program, RVector(RingId::Skew, {K(1)})).feasible);
  CHECK(kX >= K(1));
  for (const CheckReport& c : b.checks) CHECK(c.verdict == Verdict::Pass);
}

TEST_CASE("division control closes the gap") {
  const ProgramData p = gap_program_data(Q(2));
  const RVector half(RingId::Rat, {Q(1, 2)});
  CHECK(is_primal_feasible(p, half).feasible);
  CHECK(is_dual_feasible(p, half).feasible);
  CHECK(gap(p, half, half) == Q(0));
}

TEST_CASE("strong duality counterexample") {
  for (long a : {2L, 3L}) {
    const CounterexampleBundle b = strong_duality_counterexample(RingId::Int, I(a));
    CHECK(b.kind == BundleKind::StrongDualityGap);
    CHECK(b.primal_point == iv({I(0)}));
    CHECK(b.dual_point == iv({I(1)}));
    CHECK(b.gap == I(1));
    require_bundle_certificates(b);
  }
  CHECK_THROWS_AS(strong_duality_counterexample(RingId::Rat, Q(2)), PreconditionViolated);
  CHECK_THROWS_AS(strong_duality_counterexample(RingId::Poly, kPx), NoSmallestPositive);
  CHECK_THROWS_AS(strong_duality_counterexample(RingId::Int, I(1)), NotAPositiveNonUnit);
}

TEST_CASE("infeasible/optimal programs") {
  const CounterexampleBundle split =
      infeasible_optimal_program(RingId::Int, I(2), InfeasibleSide::PrimalInfeasible);
  CHECK(split.program == ProgramData(RMatrix(RingId::Int, 2, 1, {I(2), I(-2)}), iv({I(1), I(-1)}),
                                   iv({I(0)}), I(0)));
  CHECK(split.dual_point == iv({I(0), I(0)}));
  require_bundle_certificates(split);

  const CounterexampleBundle tr =
      infeasible_optimal_program(RingId::Int, I(2), InfeasibleSide::DualInfeasible);
  CHECK(tr.kind == BundleKind::InfeasibleOptimalDual);
  CHECK(tr.primal_point == iv({I(0), I(0)}));
  CHECK(tr.program.rows() == 1);
  CHECK(tr.program.cols() == 2);
  require_bundle_certificates(tr);

  for (RingId r : {RingId::Poly, RingId::Skew, RingId::OddRat}) {
    const Element a = default_nonunit(r);
    const CounterexampleBundle p = infeasible_optimal_program(r, a, InfeasibleSide::PrimalInfeasible);
    require_bundle_certificates(p);
    CHECK(eval_g(p.program, *p.dual_point).is_zero());
    const CounterexampleBundle d = infeasible_optimal_program(r, a, InfeasibleSide::DualInfeasible);
    require_bundle_certificates(d);
    CHECK(eval_f(d.program, *d.primal_point).is_zero());
  }
  CHECK_THROWS_AS(infeasible_optimal_program(RingId::Rat, Q(2), InfeasibleSide::PrimalInfeasible),
                  NotAPositiveNonUnit);
}

TEST_CASE("primal improving step") {
  CHECK(primal_improving_step(odd(2), odd(1, 3), odd(0)) == odd(1, 3));
  Element x = odd(0);
  Rational pow3 = 1;
  for (int k = 1; k <= 21; ++k) {
    x = primal_improving_step(odd(2), odd(1, 3), x);
    pow3 *= 3;
    CHECK(x == odd(0) + Element::odd_rational((pow3 - 1) / (2 * pow3)));
  }
  CHECK_THROWS_AS(primal_improving_step(Q(2), Q(1, 3), Q(1, 2)), PreconditionViolated);
  CHECK_THROWS_AS(primal_improving_step(odd(2), odd(1, 3), odd(1)), PreconditionViolated);
  CHECK_THROWS_AS(primal_improving_step(odd(2), odd(1), odd(0)), PreconditionViolated);
  CHECK_THROWS_AS(primal_improving_step(odd(2), odd(-1, 3), odd(0)), PreconditionViolated);
}

TEST_CASE("improvement factorization holds as an identity") {
  for (RingId r : kAllRings) {
    Lcg64 rng(60 + static_cast<int>(r));
    const Element one = Element::one(r);
    for (int k = 0; k < 200; ++k) {
      const Element a = sample(r, rng);
      const Element z = sample(r, rng);
      const Element x = sample(r, rng);
      const Element next = x + z * (one - a * x);
      CHECK(one - a * next == (one - a * z) * (one - a * x));
    }
  }
}

TEST_CASE("improving step on sampled valid inputs") {
  Lcg64 rng(12);
  int used = 0;
  for (int k = 0; k < 2000 && used < 200; ++k) {
    const Element z = abs(sample(RingId::Rat, rng));
    const Element x = abs(sample(RingId::Rat, rng));
    const Element one = Element::one(RingId::Rat);
    const Element a = Q(1, 1000);
    if (sign(z) != 1 || !(a * z < one) || !(a * x < one)) continue;
    ++used;
    const Element next = primal_improving_step(a, z, x);
    CHECK(next > x);
    CHECK(a * next < one);
  }
  CHECK(used > 50);
}

TEST_CASE("dual decreasing step") {
  const ProgramData p = gap_program_data(kPx);
  const RVector y1 = dual_decreasing_step(p, RVector(RingId::Poly, {pc(1)}), pc(1, 2));
  CHECK(y1 == RVector(RingId::Poly, {pc(1, 2)}));
  CHECK(eval_g(p, y1) == pc(1, 2));

  const WitnessSequence seq = dual_decreasing_sequence(p, RVector(RingId::Poly, {pc(1)}), pc(1, 2), 20);
  CHECK(seq.points.size() == 21);
  Rational expect = 1;
  for (std::size_t k = 0; k < seq.points.size(); ++k) {
    CHECK(seq.objective_values[k] == Element::constant(RingId::Poly, expect));
    CHECK(is_dual_feasible(p, seq.points[k]).feasible);
    expect /= 2;
  }

  CHECK_THROWS_AS(dual_decreasing_step(gap_program_data(I(2)), iv({I(1)}), I(1)), PreconditionViolated);
  CHECK_THROWS_AS(dual_decreasing_step(p, RVector(RingId::Poly, {pc(0)}), pc(1, 2)),
                  PreconditionViolated);

  // Over RAT the step leaves the region once 2y < 1.
  const ProgramData q = gap_program_data(Q(2));
  try {
    (void)dual_decreasing_step(q, RVector(RingId::Rat, {Q(1, 2)}), Q(1, 2));
    FAIL("expected StepLosesFeasibility");
  } catch (const StepLosesFeasibility& e) {
    CHECK(e.row() == 0);
  }
}

TEST_CASE("non-achieving bundles") {
  const CounterexampleBundle pr = non_achieving_primal(odd(2), odd(1, 3), 21);
  require_bundle_certificates(pr);
  CHECK(pr.sequence->points.size() == 22);

  for (RingId r : {RingId::Poly, RingId::Skew}) {
    const CounterexampleBundle du =
        non_achieving_dual(default_nonunit(r), Element::constant(r, Rational(1, 2)), 21);
    require_bundle_certificates(du);
    const auto& vals = du.sequence->objective_values;
    for (std::size_t k = 1; k < vals.size(); ++k) CHECK(vals[k] < vals[k - 1]);
    CHECK(vals.back() == Element::constant(r, Rational(1, Integer(1) << 21)));
  }
  CHECK_THROWS_AS(non_achieving_primal(Q(2), Q(1, 3), 3), NotAPositiveNonUnit);
}

TEST_CASE("center betweenness") {
  const CheckReport r = no_central_between_check(kX, kY, K(3, 4));
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.fact("ab") == "skew:1,1=1/2");
  CHECK(r.fact("ab < z") == "false");
  CHECK(no_central_between_check(kY, kX, K(3, 4)).fact("ab") == "skew:1,1=1/2");
  CHECK(no_central_between_check(I(2), I(3), I(6)).verdict == Verdict::Pass);
  CHECK_THROWS_AS(no_central_between_check(kX, kY, kX), PreconditionViolated);
  CHECK_THROWS_AS(no_central_between_check(-kX, kY, K(1)), PreconditionViolated);

  Lcg64 rng(9);
  for (int k = 0; k < 500; ++k) {
    const Element z = Element::constant(RingId::Skew, *sample(RingId::Rat, rng).constant_value());
    CHECK(no_central_between_check(kX, kY, z).ok());
  }
}

TEST_CASE("magnitude gap") {
  CHECK(magnitude_gap_check(I(2), I(3)).verdict == Verdict::Pass);
  CHECK(magnitude_gap_check(I(2), I(3)).fact("magnitude(ba - ab)") == "ZERO");
  CHECK(magnitude_gap_check(kX, kY).verdict == Verdict::Vacuous);
  CHECK(magnitude_gap_check(pc(2), pc(5)).verdict == Verdict::Pass);
  CHECK_THROWS_AS(magnitude_gap_check(I(0), I(3)), PreconditionViolated);
  Lcg64 rng(10);
  for (int k = 0; k < 500; ++k) {
    const Element a = abs(sample(RingId::Rat, rng)) + Q(1, 100);
    const Element b = abs(sample(RingId::Rat, rng)) + Q(1, 100);
    CHECK(magnitude_gap_check(a, b).verdict == Verdict::Pass);
  }
}
