#pragma once

#include <cstddef>

#include "ordgap/affine.hpp"
#include "ordgap/sampler.hpp"

namespace ordgap {

RVector random_vector(RingId ring, std::size_t size, Lcg64& rng);
RVector random_nonneg_vector(RingId ring, std::size_t size, Lcg64& rng);

struct ProgramInstance {
  ProgramData program;
  RVector x;
  RVector y;
};

/// Program of random shape m x n with 1 <= m, n <= max_dim and arbitrary
/// (generally infeasible) x, y.
ProgramInstance random_instance(RingId ring, Lcg64& rng, std::size_t max_dim = 3);

/// Feasible by construction: x, y >= 0 are drawn first, then
/// b := A x + noise and c := y A - noise with nonnegative noise.
ProgramInstance random_feasible_instance(RingId ring, Lcg64& rng, std::size_t max_dim = 3);

}  // namespace ordgap
