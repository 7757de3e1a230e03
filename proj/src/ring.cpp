#include "ordgap/ring.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

#include "ordgap/errors.hpp"

namespace ordgap {

namespace {

bool is_odd(const Integer& n) { return bit_test(n, 0); }

bool odd_denominator(const Rational& q) { return is_odd(denominator(q)); }

template <class Map>
void drop_zeros(Map& terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
}

void require_same_ring(const Element& a, const Element& b, const char* op) {
  if (a.ring() != b.ring()) {
    throw RingMismatch(std::string("cannot ") + op + " elements of " +
                       std::string(ring_name(a.ring())) + " and " +
                       std::string(ring_name(b.ring())));
  }
}

// 2^-k as an exact rational.
Rational inverse_power_of_two(std::uint64_t k) {
  Integer den = 1;
  den <<= static_cast<unsigned>(k);
  return Rational(Integer(1), den);
}

}  // namespace

std::string_view ring_name(RingId ring) {
  switch (ring) {
    case RingId::Int: return "int";
    case RingId::Rat: return "rat";
    case RingId::OddRat: return "oddrat";
    case RingId::Poly: return "poly";
    case RingId::Skew: return "skew";
  }
  return "?";
}

RingId parse_ring_name(std::string_view name) {
  for (RingId r : kAllRings) {
    if (ring_name(r) == name) return r;
  }
  throw ParseError("unknown ring id '" + std::string(name) + "'");
}

std::string_view magnitude_name(Magnitude m) {
  switch (m) {
    case Magnitude::Zero: return "ZERO";
    case Magnitude::Infinitesimal: return "INFINITESIMAL";
    case Magnitude::Finite: return "FINITE";
    case Magnitude::Infinite: return "INFINITE";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Construction

Element Element::integer(Integer value) { return Element(RingId::Int, std::move(value)); }

Element Element::rational(Rational value) { return Element(RingId::Rat, std::move(value)); }

Element Element::odd_rational(Rational value) {
  if (!odd_denominator(value)) {
    throw PreconditionViolated("oddrat element needs an odd denominator, got " + to_string(value));
  }
  return Element(RingId::OddRat, std::move(value));
}

Element Element::poly(PolyTerms terms) {
  drop_zeros(terms);
  return Element(RingId::Poly, std::move(terms));
}

Element Element::skew(SkewTerms terms) {
  drop_zeros(terms);
  return Element(RingId::Skew, std::move(terms));
}

Element Element::constant(RingId ring, const Rational& value) {
  switch (ring) {
    case RingId::Int:
      if (denominator(value) != 1) {
        throw PreconditionViolated(to_string(value) + " is not an integer");
      }
      return integer(numerator(value));
    case RingId::Rat: return rational(value);
    case RingId::OddRat: return odd_rational(value);
    case RingId::Poly: return poly({{0u, value}});
    case RingId::Skew: return skew({{SkewMonomial{0, 0}, value}});
  }
  throw PreconditionViolated("unknown ring");
}

Element Element::poly_x() { return poly({{1u, Rational(1)}}); }
Element Element::skew_x() { return skew({{SkewMonomial{0, 1}, Rational(1)}}); }
Element Element::skew_y() { return skew({{SkewMonomial{1, 0}, Rational(1)}}); }

bool Element::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>) {
          return v == 0;
        } else {
          return v.empty();
        }
      },
      value_);
}

std::optional<Rational> Element::constant_value() const {
  switch (ring_) {
    case RingId::Int: return Rational(as_integer());
    case RingId::Rat:
    case RingId::OddRat: return as_rational();
    case RingId::Poly: {
      const auto& t = poly_terms();
      if (t.empty()) return Rational(0);
      if (t.size() == 1 && t.begin()->first == 0) return t.begin()->second;
      return std::nullopt;
    }
    case RingId::Skew: {
      const auto& t = skew_terms();
      if (t.empty()) return Rational(0);
      if (t.size() == 1 && t.begin()->first == SkewMonomial{0, 0}) return t.begin()->second;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Arithmetic

Element operator+(const Element& a, const Element& b) {
  require_same_ring(a, b, "add");
  switch (a.ring()) {
    case RingId::Int: return Element::integer(a.as_integer() + b.as_integer());
    case RingId::Rat: return Element::rational(a.as_rational() + b.as_rational());
    case RingId::OddRat: return Element::odd_rational(a.as_rational() + b.as_rational());
    case RingId::Poly: {
      PolyTerms out = a.poly_terms();
      for (const auto& [deg, coef] : b.poly_terms()) out[deg] += coef;
      return Element::poly(std::move(out));
    }
    case RingId::Skew: {
      SkewTerms out = a.skew_terms();
      for (const auto& [mono, coef] : b.skew_terms()) out[mono] += coef;
      return Element::skew(std::move(out));
    }
  }
  throw RingMismatch("unknown ring");
}

Element operator-(const Element& a) {
  switch (a.ring()) {
    case RingId::Int: return Element::integer(-a.as_integer());
    case RingId::Rat: return Element::rational(-a.as_rational());
    case RingId::OddRat: return Element::odd_rational(-a.as_rational());
    case RingId::Poly: {
      PolyTerms out = a.poly_terms();
      for (auto& kv : out) kv.second = -kv.second;
      return Element::poly(std::move(out));
    }
    case RingId::Skew: {
      SkewTerms out = a.skew_terms();
      for (auto& kv : out) kv.second = -kv.second;
      return Element::skew(std::move(out));
    }
  }
  throw RingMismatch("unknown ring");
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  require_same_ring(a, b, "multiply");
  switch (a.ring()) {
    case RingId::Int: return Element::integer(a.as_integer() * b.as_integer());
    case RingId::Rat: return Element::rational(a.as_rational() * b.as_rational());
    case RingId::OddRat: return Element::odd_rational(a.as_rational() * b.as_rational());
    case RingId::Poly: {
      PolyTerms out;
      for (const auto& [da, ca] : a.poly_terms()) {
        for (const auto& [db, cb] : b.poly_terms()) out[da + db] += ca * cb;
      }
      return Element::poly(std::move(out));
    }
    case RingId::Skew: {
      // (y^n1 x^m1)(y^n2 x^m2) = 2^(-m1*n2) y^(n1+n2) x^(m1+m2)
      SkewTerms out;
      for (const auto& [ma, ca] : a.skew_terms()) {
        for (const auto& [mb, cb] : b.skew_terms()) {
          Rational coef = ca * cb;
          const std::uint64_t swaps = std::uint64_t{ma.xdeg} * mb.ydeg;
          if (swaps != 0) coef *= inverse_power_of_two(swaps);
          out[SkewMonomial{ma.ydeg + mb.ydeg, ma.xdeg + mb.xdeg}] += coef;
        }
      }
      return Element::skew(std::move(out));
    }
  }
  throw RingMismatch("unknown ring");
}

// ---------------------------------------------------------------------------
// Order

int sign(const Element& a) {
  auto sgn = [](const auto& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  switch (a.ring()) {
    case RingId::Int: return sgn(a.as_integer());
    case RingId::Rat:
    case RingId::OddRat: return sgn(a.as_rational());
    case RingId::Poly: {
      const auto& t = a.poly_terms();
      return t.empty() ? 0 : sgn(t.rbegin()->second);
    }
    case RingId::Skew: {
      const auto& t = a.skew_terms();
      return t.empty() ? 0 : sgn(t.rbegin()->second);
    }
  }
  return 0;
}

Element abs(const Element& a) { return sign(a) < 0 ? -a : a; }

std::strong_ordering compare(const Element& a, const Element& b) {
  require_same_ring(a, b, "compare");
  const int s = sign(a - b);
  if (s > 0) return std::strong_ordering::greater;
  if (s < 0) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::optional<Element> try_invert(const Element& a) {
  switch (a.ring()) {
    case RingId::Int: {
      const Integer& v = a.as_integer();
      if (v == 1 || v == -1) return a;
      return std::nullopt;
    }
    case RingId::Rat:
      if (a.is_zero()) return std::nullopt;
      return Element::rational(1 / a.as_rational());
    case RingId::OddRat:
      if (a.is_zero() || !is_odd(numerator(a.as_rational()))) return std::nullopt;
      return Element::odd_rational(1 / a.as_rational());
    case RingId::Poly:
    case RingId::Skew: {
      auto c = a.constant_value();
      if (!c || *c == 0) return std::nullopt;
      return Element::constant(a.ring(), 1 / *c);
    }
  }
  return std::nullopt;
}

bool is_central(const Element& a) {
  if (a.ring() != RingId::Skew) return true;
  const Element x = Element::skew_x();
  const Element y = Element::skew_y();
  return a * x == x * a && a * y == y * a;
}

Magnitude classify_magnitude(const Element& a) {
  if (a.is_zero()) return Magnitude::Zero;
  // None of the five instances has nonzero infinitesimals: a nonzero
  // constant c has n|c| >= 1 for n >= 1/|c|, and a non-constant polynomial
  // dominates every integer through its leading term.
  return a.constant_value() ? Magnitude::Finite : Magnitude::Infinite;
}

std::optional<Integer> finite_bound(const Element& a) {
  auto c = a.constant_value();
  if (!c) return std::nullopt;
  const Rational mag = *c < 0 ? Rational(-*c) : *c;
  // floor(|c|) + 1
  const Integer floor_mag = numerator(mag) / denominator(mag);
  return Integer(floor_mag + 1);
}

RingDescriptor describe(RingId ring) {
  switch (ring) {
    case RingId::Int: return {ring, true, false, Element::one(ring)};
    case RingId::Rat: return {ring, true, true, std::nullopt};
    case RingId::OddRat: return {ring, true, false, std::nullopt};
    case RingId::Poly: return {ring, true, false, std::nullopt};
    case RingId::Skew: return {ring, false, false, std::nullopt};
  }
  throw PreconditionViolated("unknown ring");
}

// ---------------------------------------------------------------------------
// Text

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

std::string to_string(const Element& a) {
  switch (a.ring()) {
    case RingId::Int: return a.as_integer().str();
    case RingId::Rat:
    case RingId::OddRat: return to_string(a.as_rational());
    case RingId::Poly: {
      const auto& t = a.poly_terms();
      if (t.empty()) return "poly:0";
      std::string out = "poly:";
      const std::uint32_t top = t.rbegin()->first;
      for (std::uint32_t d = 0; d <= top; ++d) {
        if (d != 0) out += ',';
        auto it = t.find(d);
        out += it == t.end() ? "0" : to_string(it->second);
      }
      return out;
    }
    case RingId::Skew: {
      std::string out = "skew:";
      bool first = true;
      for (auto it = a.skew_terms().rbegin(); it != a.skew_terms().rend(); ++it) {
        if (!first) out += ';';
        first = false;
        out += std::to_string(it->first.ydeg) + ',' + std::to_string(it->first.xdeg) + '=' +
               to_string(it->second);
      }
      return out;
    }
  }
  return "?";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) throw ParseError("malformed integer literal '" + std::string(text) + "'");
  return Integer(std::string(text));
}

std::uint32_t parse_degree(std::string_view text, std::string_view whole) {
  if (!all_digits(text) || text.size() > 9) {
    throw ParseError("malformed degree '" + std::string(text) + "' in '" + std::string(whole) + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(std::string(text)));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!all_digits(den)) throw ParseError("malformed denominator in '" + std::string(text) + "'");
  const Integer d(std::string{den});
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

Element parse_element(RingId ring, std::string_view text) {
  switch (ring) {
    case RingId::Int: return Element::integer(parse_integer(text));
    case RingId::Rat: return Element::rational(parse_rational(text));
    case RingId::OddRat: {
      Rational q = parse_rational(text);
      if (!odd_denominator(q)) {
        throw ParseError("oddrat literal '" + std::string(text) + "' has an even denominator");
      }
      return Element::odd_rational(std::move(q));
    }
    case RingId::Poly: {
      constexpr std::string_view prefix = "poly:";
      if (!text.starts_with(prefix)) {
        throw ParseError("poly literal must start with 'poly:', got '" + std::string(text) + "'");
      }
      PolyTerms terms;
      std::uint32_t deg = 0;
      for (std::string_view c : split(text.substr(prefix.size()), ',')) {
        terms[deg++] = parse_rational(c);
      }
      return Element::poly(std::move(terms));
    }
    case RingId::Skew: {
      constexpr std::string_view prefix = "skew:";
      if (!text.starts_with(prefix)) {
        throw ParseError("skew literal must start with 'skew:', got '" + std::string(text) + "'");
      }
      SkewTerms terms;
      const std::string_view body = text.substr(prefix.size());
      if (body.empty()) return Element::skew({});
      for (std::string_view term : split(body, ';')) {
        const std::size_t eq = term.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError("skew term '" + std::string(term) + "' lacks '='");
        }
        const auto degs = split(term.substr(0, eq), ',');
        if (degs.size() != 2) {
          throw ParseError("skew term '" + std::string(term) + "' needs 'ydeg,xdeg'");
        }
        const SkewMonomial mono{parse_degree(degs[0], text), parse_degree(degs[1], text)};
        terms[mono] += parse_rational(term.substr(eq + 1));
      }
      return Element::skew(std::move(terms));
    }
  }
  throw ParseError("unknown ring");
}

}  // namespace ordgap
