#pragma once

// Vectors and matrices over one ring. All products keep a fixed side: the
// matrix entry (or the covector entry, or the left vector of a dot) sits
// on the LEFT, which matters for SKEW.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ordgap/ring.hpp"

namespace ordgap {

class RVector {
 public:
  /// Throws RingMismatch if some entry is not in `ring`.
  RVector(RingId ring, std::vector<Element> entries);
  RVector(RingId ring, std::initializer_list<Element> entries)
      : RVector(ring, std::vector<Element>(entries)) {}

  static RVector zeros(RingId ring, std::size_t size);

  RingId ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Element& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Element> entries() const noexcept { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const RVector&, const RVector&) = default;

 private:
  RingId ring_;
  std::vector<Element> entries_;
};

class RMatrix {
 public:
  /// Row-major entries; throws DimensionMismatch unless
  /// entries.size() == rows * cols.
  RMatrix(RingId ring, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static RMatrix identity(RingId ring, std::size_t n);

  RingId ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Element& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * cols_ + col];
  }
  std::span<const Element> entries() const noexcept { return entries_; }

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  RingId ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

/// result_j = sum_i A[j,i] * x[i]
RVector mat_apply(const RMatrix& a, const RVector& x);
/// result_i = sum_j y[j] * A[j,i]
RVector covec_apply(const RVector& y, const RMatrix& a);
/// sum_i u[i] * v[i]; not symmetric over SKEW.
Element dot_left(const RVector& u, const RVector& v);

RVector operator+(const RVector& u, const RVector& v);
RVector operator-(const RVector& u, const RVector& v);
RVector operator-(const RVector& u);

/// Every entry has sign >= 0.
bool is_nonneg(const RVector& v);

/// "[e1, e2, ...]" with canonical element literals.
std::string to_string(const RVector& v);

}  // namespace ordgap
