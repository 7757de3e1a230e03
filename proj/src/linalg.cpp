#include "ordgap/linalg.hpp"

#include <algorithm>
#include <string>

#include "ordgap/errors.hpp"

namespace ordgap {

namespace {

void check_entries(RingId ring, std::span<const Element> entries) {
  for (const Element& e : entries) {
    if (e.ring() != ring) {
      throw RingMismatch("entry of ring " + std::string(ring_name(e.ring())) +
                         " in a container over " + std::string(ring_name(ring)));
    }
  }
}

void require_ring(RingId a, RingId b) {
  if (a != b) {
    throw RingMismatch("operands over " + std::string(ring_name(a)) + " and " +
                       std::string(ring_name(b)));
  }
}

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionMismatch(std::string(what) + ": expected length " + std::to_string(want) +
                            ", got " + std::to_string(got));
  }
}

}  // namespace

RVector::RVector(RingId ring, std::vector<Element> entries)
    : ring_(ring), entries_(std::move(entries)) {
  check_entries(ring_, entries_);
}

RVector RVector::zeros(RingId ring, std::size_t size) {
  return RVector(ring, std::vector<Element>(size, Element::zero(ring)));
}

RMatrix::RMatrix(RingId ring, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : ring_(ring), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_dim(entries_.size(), rows * cols, "matrix entries");
  check_entries(ring_, entries_);
}

RMatrix RMatrix::identity(RingId ring, std::size_t n) {
  std::vector<Element> entries(n * n, Element::zero(ring));
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = Element::one(ring);
  return RMatrix(ring, n, n, std::move(entries));
}

RVector mat_apply(const RMatrix& a, const RVector& x) {
  require_ring(a.ring(), x.ring());
  require_dim(x.size(), a.cols(), "mat_apply");
  std::vector<Element> out;
  out.reserve(a.rows());
  for (std::size_t j = 0; j < a.rows(); ++j) {
    Element acc = Element::zero(a.ring());
    for (std::size_t i = 0; i < a.cols(); ++i) acc = acc + a(j, i) * x[i];
    out.push_back(std::move(acc));
  }
  return RVector(a.ring(), std::move(out));
}

RVector covec_apply(const RVector& y, const RMatrix& a) {
  require_ring(a.ring(), y.ring());
  require_dim(y.size(), a.rows(), "covec_apply");
  std::vector<Element> out;
  out.reserve(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    Element acc = Element::zero(a.ring());
    for (std::size_t j = 0; j < a.rows(); ++j) acc = acc + y[j] * a(j, i);
    out.push_back(std::move(acc));
  }
  return RVector(a.ring(), std::move(out));
}

Element dot_left(const RVector& u, const RVector& v) {
  require_ring(u.ring(), v.ring());
  require_dim(v.size(), u.size(), "dot_left");
  Element acc = Element::zero(u.ring());
  for (std::size_t i = 0; i < u.size(); ++i) acc = acc + u[i] * v[i];
  return acc;
}

RVector operator+(const RVector& u, const RVector& v) {
  require_ring(u.ring(), v.ring());
  require_dim(v.size(), u.size(), "vector sum");
  std::vector<Element> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u[i] + v[i]);
  return RVector(u.ring(), std::move(out));
}

RVector operator-(const RVector& u) {
  std::vector<Element> out;
  out.reserve(u.size());
  for (const Element& e : u) out.push_back(-e);
  return RVector(u.ring(), std::move(out));
}

RVector operator-(const RVector& u, const RVector& v) { return u + (-v); }

bool is_nonneg(const RVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Element& e) { return sign(e) >= 0; });
}

std::string to_string(const RVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(v[i]);
  }
  return out + "]";
}

}  // namespace ordgap
