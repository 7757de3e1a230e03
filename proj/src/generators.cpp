#include "ordgap/generators.hpp"

#include <vector>

namespace ordgap {

RVector random_vector(RingId ring, std::size_t size, Lcg64& rng) {
  std::vector<Element> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) out.push_back(sample(ring, rng));
  return RVector(ring, std::move(out));
}

RVector random_nonneg_vector(RingId ring, std::size_t size, Lcg64& rng) {
  std::vector<Element> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) out.push_back(sample_nonneg(ring, rng));
  return RVector(ring, std::move(out));
}

namespace {

RMatrix random_matrix(RingId ring, std::size_t rows, std::size_t cols, Lcg64& rng) {
  std::vector<Element> entries;
  entries.reserve(rows * cols);
  for (std::size_t k = 0; k < rows * cols; ++k) entries.push_back(sample(ring, rng));
  return RMatrix(ring, rows, cols, std::move(entries));
}

std::size_t random_dim(Lcg64& rng, std::size_t max_dim) {
  return static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_dim)));
}

}  // namespace

ProgramInstance random_instance(RingId ring, Lcg64& rng, std::size_t max_dim) {
  const std::size_t m = random_dim(rng, max_dim);
  const std::size_t n = random_dim(rng, max_dim);
  RMatrix a = random_matrix(ring, m, n, rng);
  RVector b = random_vector(ring, m, rng);
  RVector c = random_vector(ring, n, rng);
  Element d = sample(ring, rng);
  RVector x = random_vector(ring, n, rng);
  RVector y = random_vector(ring, m, rng);
  return {ProgramData(std::move(a), std::move(b), std::move(c), std::move(d)), std::move(x),
          std::move(y)};
}

ProgramInstance random_feasible_instance(RingId ring, Lcg64& rng, std::size_t max_dim) {
  const std::size_t m = random_dim(rng, max_dim);
  const std::size_t n = random_dim(rng, max_dim);
  RMatrix a = random_matrix(ring, m, n, rng);
  RVector x = random_nonneg_vector(ring, n, rng);
  RVector y = random_nonneg_vector(ring, m, rng);
  RVector b = mat_apply(a, x) + random_nonneg_vector(ring, m, rng);
  RVector c = covec_apply(y, a) - random_nonneg_vector(ring, n, rng);
  Element d = sample(ring, rng);
  return {ProgramData(std::move(a), std::move(b), std::move(c), std::move(d)), std::move(x),
          std::move(y)};
}

}  // namespace ordgap
