#include <doctest.h>

#include "ordgap/axioms.hpp"
#include "ordgap/errors.hpp"
#include "ordgap/sampler.hpp"
#include "support.hpp"

using namespace ordgap;
using testsupport::I;
using testsupport::K;
using testsupport::lit;
using testsupport::Q;
using testsupport::WordOracle;

namespace {

const Element kX = Element::skew_x();
const Element kY = Element::skew_y();
const Element kPx = Element::poly_x();

Element poly(std::initializer_list<std::pair<const std::uint32_t, Rational>> terms) {
  return Element::poly(PolyTerms(terms));
}

}  // namespace

TEST_CASE("skew products of the generators") {
  CHECK(kY * kX == Element::skew({{{1, 1}, Rational(1)}}));
  CHECK(kX * kY == Element::skew({{{1, 1}, Rational(1, 2)}}));
  CHECK((K(2) * (kX * kY) + -(kY * kX)).is_zero());
  CHECK(I(2) * I(3) == I(6));
}

TEST_CASE("skew multiplication agrees with the word-rewrite oracle") {
  Lcg64 rng(2024);
  for (int k = 0; k < 300; ++k) {
    const Element a = sample(RingId::Skew, rng);
    const Element b = sample(RingId::Skew, rng);
    const SkewTerms expected = (WordOracle::from(a) * WordOracle::from(b)).normal();
    CHECK(a * b == Element::skew(expected));
  }
  // x^2 y^3 needs six swaps.
  const Element x2 = kX * kX;
  const Element y3 = kY * kY * kY;
  CHECK(x2 * y3 == Element::skew({{{3, 2}, Rational(1, 64)}}));
}

TEST_CASE("sign") {
  CHECK(sign(kPx - Element::constant(RingId::Poly, Rational(1000000))) == 1);
  CHECK(sign(I(0)) == 0);
  CHECK(sign(Element::zero(RingId::Skew)) == 0);
  const Element e = kY * kX * kX * kX - kY * kY * kX;
  CHECK(sign(e) == -1);
  CHECK(sign(Q(-3, 7)) == -1);
  CHECK(sign(lit(RingId::OddRat, "5/9")) == 1);
}

TEST_CASE("compare") {
  CHECK(compare(I(1), I(2)) == std::strong_ordering::less);
  CHECK(compare(kPx, Element::constant(RingId::Poly, Rational(1000000000))) ==
        std::strong_ordering::greater);
  CHECK(compare(kX * kY, kY * kX) == std::strong_ordering::less);
  CHECK_THROWS_AS((void)compare(I(1), Q(1)), RingMismatch);
  CHECK_THROWS_AS((void)(I(1) + Q(1)), RingMismatch);
  CHECK_THROWS_AS((void)(kX * kPx), RingMismatch);
}

TEST_CASE("try_invert") {
  CHECK_FALSE(try_invert(I(2)).has_value());
  CHECK(try_invert(I(-1)) == I(-1));
  CHECK(try_invert(Q(2)) == Q(1, 2));
  CHECK_FALSE(try_invert(Q(0)).has_value());
  CHECK(try_invert(lit(RingId::OddRat, "3/5")) == lit(RingId::OddRat, "5/3"));
  CHECK_FALSE(try_invert(lit(RingId::OddRat, "2")).has_value());
  CHECK_FALSE(try_invert(kPx).has_value());
  CHECK(try_invert(Element::constant(RingId::Poly, Rational(-4))) ==
        Element::constant(RingId::Poly, Rational(-1, 4)));
  CHECK_FALSE(try_invert(kX).has_value());
  CHECK(try_invert(K(3, 4)) == K(4, 3));
}

TEST_CASE("try_invert is sound on samples") {
  for (RingId r : kAllRings) {
    Lcg64 rng(11);
    for (int k = 0; k < 300; ++k) {
      const Element a = sample(r, rng);
      if (auto u = try_invert(a)) {
        CHECK(*u * a == Element::one(r));
        CHECK(a * *u == Element::one(r));
      }
    }
  }
}

TEST_CASE("is_central") {
  CHECK(is_central(K(3, 4)));
  CHECK_FALSE(is_central(kX));
  CHECK_FALSE(is_central(kY + K(1)));
  CHECK(is_central(I(7)));
  CHECK(is_central(kPx));
}

TEST_CASE("classify_magnitude") {
  CHECK(classify_magnitude(kPx) == Magnitude::Infinite);
  CHECK(classify_magnitude(Q(1, 7)) == Magnitude::Finite);
  CHECK(classify_magnitude(kX * kY) == Magnitude::Infinite);
  CHECK(classify_magnitude(I(0)) == Magnitude::Zero);
  CHECK(classify_magnitude(K(-5, 2)) == Magnitude::Finite);
  CHECK(finite_bound(Q(1, 7)) == Integer(1));
  CHECK(finite_bound(Q(-5, 2)) == Integer(3));
  CHECK(finite_bound(I(4)) == Integer(5));
  CHECK_FALSE(finite_bound(kPx).has_value());
}

TEST_CASE("magnitude is consistent with explicit bounds") {
  const Integer probe = Integer(1) << 64;
  for (RingId r : kAllRings) {
    Lcg64 rng(5);
    for (int k = 0; k < 200; ++k) {
      const Element a = sample(r, rng);
      const Magnitude m = classify_magnitude(a);
      CHECK(m != Magnitude::Infinitesimal);
      if (m == Magnitude::Finite) {
        const Element bound = Element::constant(r, Rational(*finite_bound(a)));
        CHECK(a < bound);
        CHECK(-bound < a);
      } else if (m == Magnitude::Infinite) {
        CHECK(abs(a) > Element::constant(r, Rational(probe)));
      }
    }
  }
}

TEST_CASE("descriptors") {
  const RingDescriptor in = describe(RingId::Int);
  CHECK(in.is_commutative);
  CHECK_FALSE(in.is_division);
  CHECK(in.smallest_positive == I(1));
  CHECK(describe(RingId::Rat).is_division);
  CHECK_FALSE(describe(RingId::OddRat).smallest_positive.has_value());
  CHECK_FALSE(describe(RingId::Poly).is_division);
  CHECK_FALSE(describe(RingId::Skew).is_commutative);
}

TEST_CASE("literal grammar") {
  CHECK(lit(RingId::Int, "-42") == I(-42));
  CHECK_THROWS_AS(lit(RingId::Rat, "6/-4"), ParseError);
  CHECK(lit(RingId::Rat, "6/4") == Q(3, 2));
  CHECK(to_string(lit(RingId::Rat, "6/4")) == "3/2");
  CHECK(lit(RingId::Poly, "poly:0,1") == kPx);
  CHECK(to_string(lit(RingId::Poly, "poly:1,0,0")) == "poly:1");
  CHECK(to_string(Element::zero(RingId::Poly)) == "poly:0");
  CHECK(lit(RingId::Skew, "skew:1,1=1/2") == kX * kY);
  CHECK(lit(RingId::Skew, "skew:") == Element::zero(RingId::Skew));
  CHECK(to_string(lit(RingId::Skew, "skew:0,0=1;2,0=-3;1,3=2/4")) == "skew:2,0=-3;1,3=1/2;0,0=1");
  CHECK_THROWS_AS(lit(RingId::OddRat, "1/2"), ParseError);
  CHECK_THROWS_AS(lit(RingId::OddRat, "3/6"), ParseError);
  CHECK(lit(RingId::OddRat, "2/6") == lit(RingId::OddRat, "1/3"));
  CHECK_THROWS_AS(lit(RingId::Int, "1/2"), ParseError);
  CHECK_THROWS_AS(lit(RingId::Int, "abc"), ParseError);
  CHECK_THROWS_AS(lit(RingId::Poly, "1"), ParseError);
  CHECK_THROWS_AS(lit(RingId::Skew, "skew:1=2"), ParseError);
  CHECK_THROWS_AS(lit(RingId::Rat, "1/0"), ParseError);
  CHECK_THROWS_AS(parse_ring_name("real"), ParseError);
}

TEST_CASE("text round trip and canonical representation") {
  for (RingId r : kAllRings) {
    Lcg64 rng(99);
    for (int k = 0; k < 300; ++k) {
      const Element a = sample(r, rng);
      const Element b = sample(r, rng);
      CHECK(parse_element(r, to_string(a)) == a);
      const Element prod = a * b;
      CHECK(parse_element(r, to_string(prod)) == prod);
      if (r == RingId::OddRat) {
        CHECK(boost::multiprecision::denominator(a.as_rational()) % 2 == 1);
      }
      if (r == RingId::Poly) {
        CHECK(a.poly_terms().size() <= SamplerBounds::kPolyDegree + 1);
        for (const auto& [deg, q] : prod.poly_terms()) CHECK(q != 0);
      }
      if (r == RingId::Skew) {
        for (const auto& [mono, q] : a.skew_terms()) {
          CHECK(mono.ydeg <= SamplerBounds::kSkewDegree);
          CHECK(mono.xdeg <= SamplerBounds::kSkewDegree);
        }
        for (const auto& [mono, q] : prod.skew_terms()) CHECK(q != 0);
      }
    }
  }
}

TEST_CASE("sampler streams are reproducible") {
  for (RingId r : kAllRings) {
    Lcg64 a(123);
    Lcg64 b(123);
    for (int k = 0; k < 50; ++k) CHECK(sample(r, a) == sample(r, b));
  }
  Lcg64 g(0);
  CHECK(g.next() == Lcg64::kIncrement);
  CHECK(g.next() == Lcg64::kIncrement * Lcg64::kMultiplier + Lcg64::kIncrement);
}

TEST_CASE("order is translation invariant and sign is multiplicative") {
  for (RingId r : kAllRings) {
    Lcg64 rng(17);
    for (int k = 0; k < 300; ++k) {
      const Element a = sample(r, rng);
      const Element b = sample(r, rng);
      const Element c = sample(r, rng);
      CHECK(compare(a, b) == compare(a + c, b + c));
      CHECK(sign(a * b) == sign(a) * sign(b));
      CHECK(sign(-a) == -sign(a));
    }
  }
}

TEST_CASE("skew leading monomials multiply") {
  // Lex-greatest monomial of a product is the sum of the factors' leading
  // monomials, with coefficient scaled by a power of two.
  Lcg64 rng(31);
  for (int k = 0; k < 500; ++k) {
    const Element a = sample(RingId::Skew, rng);
    const Element b = sample(RingId::Skew, rng);
    if (a.is_zero() || b.is_zero()) continue;
    const auto& [ma, qa] = *a.skew_terms().rbegin();
    const auto& [mb, qb] = *b.skew_terms().rbegin();
    const auto& [mp, qp] = *(a * b).skew_terms().rbegin();
    CHECK(mp.ydeg == ma.ydeg + mb.ydeg);
    CHECK(mp.xdeg == ma.xdeg + mb.xdeg);
    CHECK(qp == qa * qb / Rational(Integer(1) << (ma.xdeg * mb.ydeg)));
  }
}

TEST_CASE("polynomial products") {
  const Element p = poly({{0, Rational(1)}, {1, Rational(1)}});
  CHECK(p * p == poly({{0, Rational(1)}, {1, Rational(2)}, {2, Rational(1)}}));
  CHECK((p - p).is_zero());
  CHECK(kPx * Element::constant(RingId::Poly, Rational(1, 2)) == lit(RingId::Poly, "poly:0,1/2"));
}

TEST_CASE("odd-denominator embedding") {
  CHECK_THROWS_AS(Element::odd_rational(Rational(1, 2)), PreconditionViolated);
  CHECK_THROWS_AS(Element::constant(RingId::Int, Rational(1, 3)), PreconditionViolated);
  CHECK(Element::odd_rational(Rational(1, 3)) * Element::odd_rational(Rational(3)) ==
        Element::one(RingId::OddRat));
}

TEST_CASE("axiom suite") {
  for (RingId r : kAllRings) {
    const AxiomReport rep = verify_order_axioms(r, 300, 42);
    CHECK(rep.ok());
    CHECK(rep.trichotomy_checks == 600);
  }
  CHECK(verify_order_axioms(RingId::Poly, 300, 7).ok());
  CHECK(verify_order_axioms(RingId::Skew, 300, 42).relation_checks > 0);
  CHECK_THROWS(verify_order_axioms(RingId::Int, 0, 1));
}
