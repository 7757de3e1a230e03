#include "ordgap/axioms.hpp"

#include "ordgap/errors.hpp"
#include "ordgap/sampler.hpp"

namespace ordgap {

AxiomReport verify_order_axioms(RingId ring, std::size_t sample_count, std::uint64_t seed) {
  if (sample_count == 0) throw PreconditionViolated("sample_count must be positive");

  AxiomReport report{.ring = ring, .samples = sample_count, .seed = seed};
  auto fail = [&](std::string axiom, std::vector<Element> witnesses) {
    report.violations.push_back({std::move(axiom), std::move(witnesses)});
  };

  const Element zero = Element::zero(ring);
  Lcg64 rng(seed);
  for (std::size_t i = 0; i < sample_count; ++i) {
    const Element a = sample(ring, rng);
    const Element b = sample(ring, rng);
    const Element c = sample(ring, rng);

    for (const Element* e : {&a, &b}) {
      const int s = sign(*e);
      const int s_neg = sign(-*e);
      const int in_p = s == 1 ? 1 : 0;
      const int is_zero = *e == zero ? 1 : 0;
      const int in_neg_p = s_neg == 1 ? 1 : 0;
      ++report.trichotomy_checks;
      if (in_p + is_zero + in_neg_p != 1 || (is_zero == 1) != (s == 0)) {
        fail("trichotomy", {*e});
      }
    }

    if (!a.is_zero() && !b.is_zero()) {
      const Element pa = abs(a);
      const Element pb = abs(b);
      ++report.closure_checks;
      if (sign(pa + pb) != 1) fail("closure under addition", {pa, pb});
      if (sign(pa * pb) != 1) fail("closure under multiplication", {pa, pb});
      if (sign(pb * pa) != 1) fail("closure under multiplication", {pb, pa});
    }

    ++report.ring_law_checks;
    if ((a * b) * c != a * (b * c)) fail("associativity", {a, b, c});
    if (a * (b + c) != a * b + a * c) fail("left distributivity", {a, b, c});
    if ((a + b) * c != a * c + b * c) fail("right distributivity", {a, b, c});
  }

  if (ring == RingId::Skew) {
    const Element x = Element::skew_x();
    const Element y = Element::skew_y();
    const Element two = Element::constant(ring, Rational(2));
    ++report.relation_checks;
    if (!(y * x - two * (x * y)).is_zero()) fail("relation yx = 2xy", {x, y});
  }
  return report;
}

}  // namespace ordgap
