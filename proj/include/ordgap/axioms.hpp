#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ordgap/ring.hpp"

namespace ordgap {

struct AxiomViolation {
  std::string axiom;
  std::vector<Element> witnesses;
};

struct AxiomReport {
  RingId ring;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t trichotomy_checks = 0;
  std::size_t closure_checks = 0;
  std::size_t ring_law_checks = 0;      // associativity, distributivity
  std::size_t relation_checks = 0;      // yx = 2xy, SKEW only
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Samples `sample_count` triples (a, b, c) from a seeded stream and checks
///  - trichotomy: exactly one of a in P, a = 0, -a in P;
///  - closure of P under + and * (on |a|, |b| whenever both are nonzero);
///  - associativity of * and two-sided distributivity;
///  - for SKEW, the defining relation yx - 2xy = 0.
/// Violations are collected with their witnesses, never thrown.
AxiomReport verify_order_axioms(RingId ring, std::size_t sample_count, std::uint64_t seed);

}  // namespace ordgap
