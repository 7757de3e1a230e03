#pragma once

// Exact ordered rings. Five instances share one tagged element type:
//
//   INT     the integers
//   RAT     the rationals
//   ODDRAT  rationals with odd denominator (integers localized away from 2)
//   POLY    Q[x], positive iff the leading coefficient is positive
//   SKEW    Q<x,y>/(yx - 2xy), normal form y^n x^m, positive iff the
//           coefficient of the lex-greatest (n, m) is positive
//
// Elements are immutable values in canonical form, so structural equality
// is ring equality.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordgap {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class RingId { Int, Rat, OddRat, Poly, Skew };

inline constexpr RingId kAllRings[] = {RingId::Int, RingId::Rat, RingId::OddRat, RingId::Poly,
                                       RingId::Skew};

/// Lower-case name used by the CLI and the file format ("int", "oddrat", ...).
std::string_view ring_name(RingId ring);
/// Inverse of ring_name; throws ParseError on unknown names.
RingId parse_ring_name(std::string_view name);

struct SkewMonomial {
  std::uint32_t ydeg = 0;
  std::uint32_t xdeg = 0;

  auto operator<=>(const SkewMonomial&) const = default;
};

using PolyTerms = std::map<std::uint32_t, Rational>;
using SkewTerms = std::map<SkewMonomial, Rational>;

class Element {
 public:
  static Element integer(Integer value);
  static Element rational(Rational value);
  /// Throws PreconditionViolated unless the reduced denominator is odd.
  static Element odd_rational(Rational value);
  static Element poly(PolyTerms terms);
  static Element skew(SkewTerms terms);

  /// Embeds a rational constant; throws PreconditionViolated when the
  /// value is not in the ring (non-integer into INT, even denominator
  /// into ODDRAT).
  static Element constant(RingId ring, const Rational& value);
  static Element zero(RingId ring) { return constant(ring, Rational(0)); }
  static Element one(RingId ring) { return constant(ring, Rational(1)); }

  static Element poly_x();
  static Element skew_x();
  static Element skew_y();

  RingId ring() const noexcept { return ring_; }
  bool is_zero() const;
  /// The value when the element is a constant (always, for INT/RAT/ODDRAT).
  std::optional<Rational> constant_value() const;

  const Integer& as_integer() const { return std::get<Integer>(value_); }
  const Rational& as_rational() const { return std::get<Rational>(value_); }
  const PolyTerms& poly_terms() const { return std::get<PolyTerms>(value_); }
  const SkewTerms& skew_terms() const { return std::get<SkewTerms>(value_); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  using Storage = std::variant<Integer, Rational, PolyTerms, SkewTerms>;
  Element(RingId ring, Storage value) : ring_(ring), value_(std::move(value)) {}

  RingId ring_;
  Storage value_;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);

/// +1 if a is positive, 0 if zero, -1 if -a is positive.
int sign(const Element& a);
Element abs(const Element& a);

/// Ring order via sign(a - b). Throws RingMismatch.
std::strong_ordering compare(const Element& a, const Element& b);
inline std::strong_ordering operator<=>(const Element& a, const Element& b) {
  return compare(a, b);
}

/// u with u*a = a*u = 1, or nullopt when a is not a unit.
std::optional<Element> try_invert(const Element& a);

/// Commutes with every element of its ring.
bool is_central(const Element& a);

enum class Magnitude { Zero, Infinitesimal, Finite, Infinite };

std::string_view magnitude_name(Magnitude m);

Magnitude classify_magnitude(const Element& a);
/// Least positive integer m with -m < a < m, or nullopt when a is infinite.
std::optional<Integer> finite_bound(const Element& a);

struct RingDescriptor {
  RingId ring;
  bool is_commutative;
  bool is_division;
  std::optional<Element> smallest_positive;
};

RingDescriptor describe(RingId ring);

/// Canonical text form (see parse_element for the grammar).
std::string to_string(const Element& a);

/// Element literal grammar:
///   INT          -?[0-9]+
///   RAT, ODDRAT  int | int/uint
///   POLY         poly:c0,c1,...,ck       ascending degree, rational ci
///   SKEW         skew:n,m=q;n,m=q;...     y-degree, x-degree, rational
/// Throws ParseError.
Element parse_element(RingId ring, std::string_view text);

/// Rational literal `int` or `int/uint`, exact. Throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

}  // namespace ordgap
