#include "ordgap/affine.hpp"

#include <string>

#include "ordgap/errors.hpp"

namespace ordgap {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Violation: return "VIOLATION";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
    case Verdict::Vacuous: return "VACUOUS";
  }
  return "?";
}

ProgramData::ProgramData(RMatrix a, RVector b, RVector c, Element d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (b_.ring() != ring() || c_.ring() != ring() || d_.ring() != ring()) {
    throw RingMismatch("program components must share one ring");
  }
  if (b_.size() != rows()) {
    throw DimensionMismatch("b has length " + std::to_string(b_.size()) + ", A has " +
                            std::to_string(rows()) + " rows");
  }
  if (c_.size() != cols()) {
    throw DimensionMismatch("c has length " + std::to_string(c_.size()) + ", A has " +
                            std::to_string(cols()) + " columns");
  }
}

namespace {

void require_len(const RVector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw DimensionMismatch(std::string(what) + " has length " + std::to_string(v.size()) +
                            ", expected " + std::to_string(n));
  }
}

FeasibilityVerdict first_violation(const RVector& vars, const RVector& slack) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (sign(vars[i]) < 0) return {false, i, ViolationKind::NegativeVariable};
  }
  for (std::size_t j = 0; j < slack.size(); ++j) {
    if (sign(slack[j]) < 0) return {false, j, ViolationKind::SlackNegative};
  }
  return {};
}

}  // namespace

RVector primal_slack(const ProgramData& p, const RVector& x) {
  require_len(x, p.cols(), "x");
  return p.b() - mat_apply(p.a(), x);
}

RVector dual_slack(const ProgramData& p, const RVector& y) {
  require_len(y, p.rows(), "y");
  return covec_apply(y, p.a()) - p.c();
}

SlackPair slacks(const ProgramData& p, const RVector& x, const RVector& y) {
  return {primal_slack(p, x), dual_slack(p, y)};
}

FeasibilityVerdict is_primal_feasible(const ProgramData& p, const RVector& x) {
  return first_violation(x, primal_slack(p, x));
}

FeasibilityVerdict is_dual_feasible(const ProgramData& p, const RVector& y) {
  return first_violation(y, dual_slack(p, y));
}

Element eval_f(const ProgramData& p, const RVector& x) {
  require_len(x, p.cols(), "x");
  return dot_left(p.c(), x) - p.d();
}

Element eval_g(const ProgramData& p, const RVector& y) {
  require_len(y, p.rows(), "y");
  return dot_left(y, p.b()) - p.d();
}

Element key_equation_residual(const ProgramData& p, const RVector& x, const RVector& y) {
  const auto [t, s] = slacks(p, x, y);
  const Element lhs = dot_left(s, x) - eval_g(p, y);
  const Element rhs = dot_left(y, -t) - eval_f(p, x);
  return lhs - rhs;
}

Element duality_equation_residual(const ProgramData& p, const RVector& x, const RVector& y) {
  const auto [t, s] = slacks(p, x, y);
  return gap(p, x, y) - (dot_left(s, x) + dot_left(y, t));
}

Element gap(const ProgramData& p, const RVector& x, const RVector& y) {
  return eval_g(p, y) - eval_f(p, x);
}

CheckReport assert_weak_duality(const ProgramData& p, const RVector& x, const RVector& y) {
  CheckReport report{.check = "weak duality"};
  const FeasibilityVerdict primal = is_primal_feasible(p, x);
  const FeasibilityVerdict dual = is_dual_feasible(p, y);
  if (!primal.feasible || !dual.feasible) {
    report.verdict = Verdict::NotApplicable;
    report.notes.push_back(!primal.feasible ? "x is not primal feasible" : "y is not dual feasible");
    return report;
  }
  const auto [t, s] = slacks(p, x, y);
  const Element g_minus_f = gap(p, x, y);
  const Element slack_sum = dot_left(s, x) + dot_left(y, t);
  report.add("f", eval_f(p, x));
  report.add("g", eval_g(p, y));
  report.add("gap", g_minus_f);
  report.add("s.x + y.t", slack_sum);
  if (sign(g_minus_f) < 0) {
    report.verdict = Verdict::Violation;
    report.notes.push_back("negative gap for a feasible pair");
  }
  if (g_minus_f != slack_sum) {
    report.verdict = Verdict::Violation;
    report.notes.push_back("gap differs from s.x + y.t");
  }
  return report;
}

}  // namespace ordgap
