#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ordgap/affine.hpp"
#include "ordgap/ring.hpp"

namespace testsupport {

using ordgap::Element;
using ordgap::Rational;
using ordgap::RingId;

inline Element lit(RingId ring, const std::string& text) { return ordgap::parse_element(ring, text); }
inline Element I(long v) { return Element::constant(RingId::Int, Rational(v)); }
inline Element Q(long n, long d = 1) { return Element::constant(RingId::Rat, Rational(n, d)); }
inline Element K(long n, long d = 1) { return Element::constant(RingId::Skew, Rational(n, d)); }

inline std::string fixture(const std::string& name) {
  return std::string(ORDGAP_FIXTURE_DIR) + "/" + name;
}

// Words over {x, y} with rational coefficients, reduced only by the rewrite
// xy -> (1/2) yx. Independent of the normal-form multiplication in ring.cpp.
class WordOracle {
 public:
  using Terms = std::map<std::string, Rational>;

  static WordOracle from(const Element& e) {
    WordOracle w;
    for (const auto& [mono, q] : e.skew_terms()) {
      w.terms_[std::string(mono.ydeg, 'y') + std::string(mono.xdeg, 'x')] += q;
    }
    return w;
  }

  WordOracle operator*(const WordOracle& o) const {
    WordOracle out;
    for (const auto& [u, p] : terms_) {
      for (const auto& [v, q] : o.terms_) out.add(u + v, p * q);
    }
    return out;
  }

  // Back to (ydeg, xdeg) coordinates; every word is normal after add().
  ordgap::SkewTerms normal() const {
    ordgap::SkewTerms out;
    for (const auto& [w, q] : terms_) {
      if (q == 0) continue;
      const auto ys = static_cast<std::uint32_t>(std::count(w.begin(), w.end(), 'y'));
      out[{ys, static_cast<std::uint32_t>(w.size()) - ys}] += q;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

 private:
  void add(std::string w, Rational q) {
    for (auto pos = w.find("xy"); pos != std::string::npos; pos = w.find("xy")) {
      w[pos] = 'y';
      w[pos + 1] = 'x';
      q /= 2;
    }
    terms_[w] += q;
  }

  Terms terms_;
};

// g - f and s.x + y.t from raw entries, without the library's slack or
// product helpers.
struct DoubleSums {
  Element g_minus_f;
  Element slack_sum;
};

inline DoubleSums double_sums(const ordgap::ProgramData& p, const ordgap::RVector& x,
                              const ordgap::RVector& y) {
  const RingId r = p.ring();
  Element cx = Element::zero(r);
  for (std::size_t i = 0; i < p.cols(); ++i) cx = cx + p.c()[i] * x[i];
  Element yb = Element::zero(r);
  for (std::size_t j = 0; j < p.rows(); ++j) yb = yb + y[j] * p.b()[j];
  Element sx = Element::zero(r);
  for (std::size_t i = 0; i < p.cols(); ++i) {
    Element s_i = -p.c()[i];
    for (std::size_t j = 0; j < p.rows(); ++j) s_i = s_i + y[j] * p.a()(j, i);
    sx = sx + s_i * x[i];
  }
  Element yt = Element::zero(r);
  for (std::size_t j = 0; j < p.rows(); ++j) {
    Element t_j = p.b()[j];
    for (std::size_t i = 0; i < p.cols(); ++i) t_j = t_j - p.a()(j, i) * x[i];
    yt = yt + y[j] * t_j;
  }
  return {(yb - p.d()) - (cx - p.d()), sx + yt};
}

}  // namespace testsupport
