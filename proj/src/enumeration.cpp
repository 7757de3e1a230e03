#include "ordgap/enumeration.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>
#include <thread>

#include "ordgap/errors.hpp"

namespace ordgap {

std::string_view status_name(StatusKind k) {
  switch (k) {
    case StatusKind::Infeasible: return "INFEASIBLE";
    case StatusKind::FeasibleUnboundedInBox: return "FEASIBLE_UNBOUNDED_IN_BOX";
    case StatusKind::FeasibleBounded: return "FEASIBLE_BOUNDED";
    case StatusKind::Optimal: return "OPTIMAL";
  }
  return "?";
}

std::string_view scope_name(Scope s) {
  return s == Scope::Exhaustive ? "EXHAUSTIVE" : "BOX_LIMITED";
}

std::string ProgramStatus::summary() const {
  std::string out;
  if (kind == StatusKind::Infeasible && scope == Scope::BoxLimited) {
    out = "no feasible point in box";
  } else {
    out = std::string(status_name(kind));
  }
  if (witness) out += " witness=" + to_string(*witness);
  if (value) out += " value=" + to_string(*value);
  out += scope == Scope::Exhaustive ? " (exhaustive)" : " (box-limited)";
  return out;
}

bool is_enumerable(RingId ring) {
  return ring == RingId::Int || ring == RingId::Rat || ring == RingId::OddRat;
}

std::vector<Element> box_values(RingId ring, const BoxSpec& box) {
  if (!is_enumerable(ring)) {
    throw UnsupportedRing(std::string(ring_name(ring)) + " is not enumerable");
  }
  if (box.bound == 0) throw PreconditionViolated("box bound must be positive");
  const std::uint32_t den_bound = ring == RingId::Int ? 1 : box.denominator_bound.value_or(1);
  if (den_bound == 0) throw PreconditionViolated("denominator bound must be positive");

  std::set<Rational> values;
  for (std::uint32_t q = 1; q <= den_bound; ++q) {
    if (ring == RingId::OddRat && q % 2 == 0) continue;
    const std::uint64_t top = std::uint64_t{box.bound} * q;
    for (std::uint64_t k = 0; k <= top; ++k) values.insert(Rational(Integer(k), Integer(q)));
  }
  std::vector<Element> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(Element::constant(ring, v));
  return out;
}

namespace {

constexpr std::uint64_t kMaxPoints = 50'000'000;

enum class Side { Primal, Dual };

Rational to_rational(const Element& e) { return *e.constant_value(); }

std::string var_name(Side side, std::size_t k) {
  return (side == Side::Primal ? "x" : "y") + std::to_string(k + 1);
}

// Upper bounds derived from rows  sum_k coef_k v_k <= rhs  over v >= 0.
struct AnalyticBounds {
  std::vector<std::optional<Rational>> upper;
  std::vector<std::string> notes;
  bool infeasible = false;

  explicit AnalyticBounds(std::size_t vars) : upper(vars) {}

  void apply(Side side, const std::string& label, const std::vector<Rational>& coef,
             const Rational& rhs) {
    if (std::any_of(coef.begin(), coef.end(), [](const Rational& a) { return a < 0; })) return;
    std::string lhs;
    for (std::size_t k = 0; k < coef.size(); ++k) {
      if (coef[k] == 0) continue;
      if (!lhs.empty()) lhs += " + ";
      lhs += to_string(coef[k]) + "*" + var_name(side, k);
    }
    if (lhs.empty()) lhs = "0";
    const std::string row = label + " (" + lhs + " <= " + to_string(rhs) + ")";
    if (rhs < 0) {
      infeasible = true;
      notes.push_back(row + " has no nonnegative solution");
      return;
    }
    for (std::size_t k = 0; k < coef.size(); ++k) {
      if (coef[k] <= 0) continue;
      const Rational u = rhs / coef[k];
      if (!upper[k] || u < *upper[k]) {
        upper[k] = u;
        notes.push_back(row + " gives " + var_name(side, k) + " <= " + to_string(u));
      }
    }
  }

  bool covers_box(RingId ring, std::uint32_t n) const {
    return std::all_of(upper.begin(), upper.end(), [&](const std::optional<Rational>& u) {
      if (!u) return false;
      if (ring == RingId::Int) {
        const Integer fl = numerator(*u) / denominator(*u);  // u >= 0
        return *u < 0 || fl <= n;
      }
      return *u <= 0;
    });
  }
};

AnalyticBounds region_bounds(const ProgramData& p, Side side) {
  if (side == Side::Primal) {
    AnalyticBounds bounds(p.cols());
    for (std::size_t j = 0; j < p.rows(); ++j) {
      std::vector<Rational> coef;
      for (std::size_t i = 0; i < p.cols(); ++i) coef.push_back(to_rational(p.a()(j, i)));
      bounds.apply(side, "row " + std::to_string(j + 1), coef, to_rational(p.b()[j]));
    }
    return bounds;
  }
  // y A >= c  <=>  sum_j (-A_ji) y_j <= -c_i
  AnalyticBounds bounds(p.rows());
  for (std::size_t i = 0; i < p.cols(); ++i) {
    std::vector<Rational> coef;
    for (std::size_t j = 0; j < p.rows(); ++j) coef.push_back(-to_rational(p.a()(j, i)));
    bounds.apply(side, "column " + std::to_string(i + 1), coef, -to_rational(p.c()[i]));
  }
  return bounds;
}

void level_set_bounds(AnalyticBounds& bounds, const ProgramData& p, Side side,
                      const Element& best) {
  const Rational level = to_rational(best) + to_rational(p.d());
  if (side == Side::Primal) {
    // c.x - d >= best  <=>  sum_i (-c_i) x_i <= -(best + d)
    std::vector<Rational> coef;
    for (const Element& ci : p.c()) coef.push_back(-to_rational(ci));
    bounds.apply(side, "objective level set", coef, -level);
  } else {
    // y.b - d <= best  <=>  sum_j b_j y_j <= best + d
    std::vector<Rational> coef;
    for (const Element& bj : p.b()) coef.push_back(to_rational(bj));
    bounds.apply(side, "objective level set", coef, level);
  }
}

struct Partial {
  std::size_t scanned = 0;
  std::size_t feasible = 0;
  std::vector<std::size_t> best_digits;
  std::optional<Element> best_value;
  bool best_has_interior = false;
};

bool lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Folds a candidate optimum (value, digits, interior) into `acc`.
void fold(Partial& acc, Side side, const Element& value, const std::vector<std::size_t>& digits,
          bool interior) {
  if (!acc.best_value) {
    acc.best_value = value;
    acc.best_digits = digits;
    acc.best_has_interior = interior;
    return;
  }
  const auto cmp = compare(value, *acc.best_value);
  const bool better = side == Side::Primal ? cmp > 0 : cmp < 0;
  if (better) {
    acc.best_value = value;
    acc.best_digits = digits;
    acc.best_has_interior = interior;
  } else if (cmp == 0) {
    if (lex_less(digits, acc.best_digits)) acc.best_digits = digits;
    acc.best_has_interior = acc.best_has_interior || interior;
  }
}

ProgramStatus scan(const ProgramData& p, const BoxSpec& box, ScanOptions opts, Side side) {
  const RingId ring = p.ring();
  if (!is_enumerable(ring)) {
    throw UnsupportedRing("enumeration over " + std::string(ring_name(ring)) +
                          " is not supported (only int, rat, oddrat)");
  }
  const std::vector<Element> values = box_values(ring, box);
  const std::size_t vars = side == Side::Primal ? p.cols() : p.rows();
  const std::size_t radix = values.size();

  std::uint64_t total = 1;
  for (std::size_t k = 0; k < vars; ++k) {
    if (total > kMaxPoints / radix) {
      throw PreconditionViolated("box too large: more than " + std::to_string(kMaxPoints) +
                                 " points");
    }
    total *= radix;
  }

  auto point_at = [&](std::uint64_t index, std::vector<std::size_t>& digits) {
    // First variable is the most significant digit, so index order is
    // lexicographic order of points.
    for (std::size_t k = vars; k-- > 0;) {
      digits[k] = static_cast<std::size_t>(index % radix);
      index /= radix;
    }
    std::vector<Element> entries;
    entries.reserve(vars);
    for (std::size_t d : digits) entries.push_back(values[d]);
    return RVector(ring, std::move(entries));
  };

  auto work = [&](std::uint64_t begin, std::uint64_t end, Partial& out) {
    std::vector<std::size_t> digits(vars);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const RVector point = point_at(idx, digits);
      ++out.scanned;
      const bool feasible = side == Side::Primal ? is_primal_feasible(p, point).feasible
                                                 : is_dual_feasible(p, point).feasible;
      if (!feasible) continue;
      ++out.feasible;
      const Element value = side == Side::Primal ? eval_f(p, point) : eval_g(p, point);
      const bool interior =
          std::none_of(digits.begin(), digits.end(), [&](std::size_t d) { return d + 1 == radix; });
      fold(out, side, value, digits, interior);
    }
  };

  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                       : opts.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  std::vector<Partial> partials(threads);
  if (threads <= 1) {
    work(0, total, partials[0]);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = total * w / threads;
      const std::uint64_t end = total * (w + 1) / threads;
      pool.emplace_back([&, w, begin, end] {
        try {
          work(begin, end, partials[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  Partial merged;
  for (const Partial& part : partials) {
    merged.scanned += part.scanned;
    merged.feasible += part.feasible;
    if (part.best_value) {
      fold(merged, side, *part.best_value, part.best_digits, part.best_has_interior);
    }
  }

  ProgramStatus status;
  status.points_scanned = merged.scanned;
  status.feasible_points = merged.feasible;
  AnalyticBounds bounds = region_bounds(p, side);

  if (!merged.best_value) {
    status.kind = StatusKind::Infeasible;
    if (bounds.infeasible || bounds.covers_box(ring, box.bound)) {
      status.scope = Scope::Exhaustive;
      status.notes = std::move(bounds.notes);
    }
    return status;
  }

  std::vector<Element> entries;
  for (std::size_t d : merged.best_digits) entries.push_back(values[d]);
  status.witness = RVector(ring, std::move(entries));
  status.value = merged.best_value;

  level_set_bounds(bounds, p, side, *merged.best_value);
  if (bounds.covers_box(ring, box.bound)) {
    status.scope = Scope::Exhaustive;
    status.kind = StatusKind::Optimal;
    status.notes = std::move(bounds.notes);
  } else {
    status.kind =
        merged.best_has_interior ? StatusKind::Optimal : StatusKind::FeasibleUnboundedInBox;
  }
  return status;
}

}  // namespace

ProgramStatus enumerate_primal(const ProgramData& p, const BoxSpec& box, ScanOptions opts) {
  return scan(p, box, opts, Side::Primal);
}

ProgramStatus enumerate_dual(const ProgramData& p, const BoxSpec& box, ScanOptions opts) {
  return scan(p, box, opts, Side::Dual);
}

CheckReport certify_optimal_pair(const ProgramData& p, const std::optional<RVector>& x_star,
                                 const std::optional<RVector>& y_star, const BoxSpec& box,
                                 ScanOptions opts) {
  CheckReport report{.check = "optimal pair certification"};
  auto refute = [&](std::string why) {
    report.verdict = Verdict::Violation;
    report.notes.push_back(std::move(why));
  };

  const ProgramStatus primal = enumerate_primal(p, box, opts);
  const ProgramStatus dual = enumerate_dual(p, box, opts);
  report.add("primal status", primal.summary());
  report.add("dual status", dual.summary());

  if (x_star) {
    if (x_star->size() != p.cols()) throw DimensionMismatch("x* has the wrong length");
    const Element f = eval_f(p, *x_star);
    report.add("x*", to_string(*x_star));
    report.add("f(x*)", f);
    if (!is_primal_feasible(p, *x_star).feasible) {
      refute("x* is not primal feasible");
    } else if (primal.value && compare(*primal.value, f) > 0) {
      refute("in-box point " + to_string(*primal.witness) + " has larger f = " +
             to_string(*primal.value));
    }
  }
  if (y_star) {
    if (y_star->size() != p.rows()) throw DimensionMismatch("y* has the wrong length");
    const Element g = eval_g(p, *y_star);
    report.add("y*", to_string(*y_star));
    report.add("g(y*)", g);
    if (!is_dual_feasible(p, *y_star).feasible) {
      refute("y* is not dual feasible");
    } else if (dual.value && compare(*dual.value, g) < 0) {
      refute("in-box point " + to_string(*dual.witness) + " has smaller g = " +
             to_string(*dual.value));
    }
  }
  if (x_star && y_star) report.add("gap", gap(p, *x_star, *y_star));

  const bool exhaustive = (!x_star || primal.scope == Scope::Exhaustive) &&
                          (!y_star || dual.scope == Scope::Exhaustive);
  report.add("scope", std::string(scope_name(exhaustive ? Scope::Exhaustive : Scope::BoxLimited)));
  for (const auto& n : primal.notes) report.notes.push_back("primal: " + n);
  for (const auto& n : dual.notes) report.notes.push_back("dual: " + n);
  return report;
}

EdtClassification classify_edt(const ProgramData& p, const BoxSpec& box, ScanOptions opts) {
  EdtClassification out{.primal = enumerate_primal(p, box, opts),
                        .dual = enumerate_dual(p, box, opts)};
  const StatusKind pk = out.primal.kind;
  const StatusKind dk = out.dual.kind;
  using K = StatusKind;
  if (pk == K::Infeasible && dk == K::Infeasible) {
    out.edt_case = 1;
  } else if (pk == K::Infeasible && dk == K::FeasibleUnboundedInBox) {
    out.edt_case = 2;
  } else if (pk == K::FeasibleUnboundedInBox && dk == K::Infeasible) {
    out.edt_case = 3;
  } else if (pk == K::Optimal && dk == K::Optimal) {
    out.edt_case = 4;
    out.gap = gap(p, *out.primal.witness, *out.dual.witness);
  }
  const std::string joint = "primal " + std::string(status_name(pk)) + ", dual " +
                            std::string(status_name(dk));
  if (out.edt_case) {
    out.details = joint + ": case " + std::to_string(*out.edt_case);
    if (out.gap) out.details += " with gap " + to_string(*out.gap);
  } else {
    out.details = joint + ": outside the four classical cases";
  }
  return out;
}

}  // namespace ordgap
