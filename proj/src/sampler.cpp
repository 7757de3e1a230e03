#include "ordgap/sampler.hpp"

#include "ordgap/errors.hpp"

namespace ordgap {

std::int64_t Lcg64::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PreconditionViolated("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span > (std::uint64_t{1} << 32)) throw PreconditionViolated("sampling range too wide");
  const std::uint64_t range = std::uint64_t{1} << 32;
  const std::uint64_t limit = range - range % span;
  while (true) {
    const std::uint64_t draw = next() >> 32;
    if (draw < limit) return lo + static_cast<std::int64_t>(draw % span);
  }
}

namespace {

Rational sample_rational(Lcg64& rng, bool odd_only) {
  const std::int64_t num = rng.uniform(-SamplerBounds::kMagnitude, SamplerBounds::kMagnitude);
  std::int64_t den = rng.uniform(1, SamplerBounds::kDenominator);
  while (odd_only && den % 2 == 0) den = rng.uniform(1, SamplerBounds::kDenominator);
  return Rational(Integer(num), Integer(den));
}

}  // namespace

Element sample(RingId ring, Lcg64& rng) {
  switch (ring) {
    case RingId::Int:
      return Element::integer(
          Integer(rng.uniform(-SamplerBounds::kMagnitude, SamplerBounds::kMagnitude)));
    case RingId::Rat: return Element::rational(sample_rational(rng, false));
    case RingId::OddRat: return Element::odd_rational(sample_rational(rng, true));
    case RingId::Poly: {
      const auto degree = static_cast<std::uint32_t>(rng.uniform(0, SamplerBounds::kPolyDegree));
      PolyTerms terms;
      for (std::uint32_t d = 0; d <= degree; ++d) terms[d] = sample_rational(rng, false);
      return Element::poly(std::move(terms));
    }
    case RingId::Skew: {
      const std::int64_t count = rng.uniform(1, SamplerBounds::kSkewTerms);
      SkewTerms terms;
      for (std::int64_t i = 0; i < count; ++i) {
        const auto n = static_cast<std::uint32_t>(rng.uniform(0, SamplerBounds::kSkewDegree));
        const auto m = static_cast<std::uint32_t>(rng.uniform(0, SamplerBounds::kSkewDegree));
        terms[SkewMonomial{n, m}] += sample_rational(rng, false);
      }
      return Element::skew(std::move(terms));
    }
  }
  throw PreconditionViolated("unknown ring");
}

Element sample_nonneg(RingId ring, Lcg64& rng) { return abs(sample(ring, rng)); }

}  // namespace ordgap
