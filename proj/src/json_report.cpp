#include "ordgap/json_report.hpp"

#include "ordgap/errors.hpp"

namespace ordgap {

namespace {

Json strings(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

template <class Enum, class NameFn, std::size_t N>
Enum parse_enum(std::string_view name, NameFn fn, const Enum (&all)[N], const char* what) {
  for (Enum e : all) {
    if (fn(e) == name) return e;
  }
  throw ParseError(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

}  // namespace

Json to_json(const RVector& v) {
  Json out = Json::array();
  for (const Element& e : v) out.push_back(to_string(e));
  return out;
}

Json to_json(const ProgramData& p) {
  Json rows = Json::array();
  for (std::size_t j = 0; j < p.rows(); ++j) {
    Json row = Json::array();
    for (std::size_t i = 0; i < p.cols(); ++i) row.push_back(to_string(p.a()(j, i)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["ring"] = std::string(ring_name(p.ring()));
  out["rows"] = p.rows();
  out["cols"] = p.cols();
  out["A"] = std::move(rows);
  out["b"] = to_json(p.b());
  out["c"] = to_json(p.c());
  out["d"] = to_string(p.d());
  return out;
}

ProgramData program_from_json(const Json& j) {
  try {
    const RingId ring = parse_ring_name(j.at("ring").get<std::string>());
    const std::size_t m = j.at("rows").get<std::size_t>();
    const std::size_t n = j.at("cols").get<std::size_t>();
    std::vector<Element> a;
    for (const Json& row : j.at("A")) {
      for (const Json& e : row) a.push_back(parse_element(ring, e.get<std::string>()));
    }
    auto vec = [&](const Json& arr) {
      std::vector<Element> out;
      for (const Json& e : arr) out.push_back(parse_element(ring, e.get<std::string>()));
      return RVector(ring, std::move(out));
    };
    return ProgramData(RMatrix(ring, m, n, std::move(a)), vec(j.at("b")), vec(j.at("c")),
                       parse_element(ring, j.at("d").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed program JSON: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("malformed program JSON: ") + e.what());
  }
}

Json to_json(const CheckReport& r) {
  Json facts = Json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  Json out;
  out["check"] = r.check;
  out["verdict"] = std::string(verdict_name(r.verdict));
  out["facts"] = std::move(facts);
  out["notes"] = strings(r.notes);
  return out;
}

Json to_json(const ProgramStatus& s) {
  Json out;
  out["status"] = std::string(status_name(s.kind));
  out["scope"] = std::string(scope_name(s.scope));
  out["witness"] = s.witness ? to_json(*s.witness) : Json(nullptr);
  out["value"] = s.value ? Json(to_string(*s.value)) : Json(nullptr);
  out["points_scanned"] = s.points_scanned;
  out["feasible_points"] = s.feasible_points;
  out["notes"] = strings(s.notes);
  return out;
}

Json to_json(const EdtClassification& e) {
  Json out;
  out["case"] = e.edt_case ? Json(*e.edt_case) : Json("VIOLATION");
  out["violation"] = e.violation();
  out["details"] = e.details;
  out["scope"] = std::string(scope_name(e.scope()));
  out["gap"] = e.gap ? Json(to_string(*e.gap)) : Json(nullptr);
  out["primal"] = to_json(e.primal);
  out["dual"] = to_json(e.dual);
  return out;
}

Json to_json(const WitnessSequence& s) {
  Json points = Json::array();
  for (const RVector& p : s.points) points.push_back(to_json(p));
  Json values = Json::array();
  for (const Element& v : s.objective_values) values.push_back(to_string(v));
  Json out;
  out["ring"] = std::string(ring_name(s.ring));
  out["role"] = std::string(sequence_role_name(s.role));
  out["points"] = std::move(points);
  out["objective_values"] = std::move(values);
  return out;
}

Json to_json(const CounterexampleBundle& b) {
  Json checks = Json::array();
  for (const CheckReport& c : b.checks) checks.push_back(to_json(c));
  Json out;
  out["kind"] = std::string(bundle_kind_name(b.kind));
  out["program"] = to_json(b.program);
  out["primal_point"] = b.primal_point ? to_json(*b.primal_point) : Json(nullptr);
  out["dual_point"] = b.dual_point ? to_json(*b.dual_point) : Json(nullptr);
  out["gap"] = b.gap ? Json(to_string(*b.gap)) : Json(nullptr);
  out["sequence"] = b.sequence ? to_json(*b.sequence) : Json(nullptr);
  out["checks"] = std::move(checks);
  out["notes"] = strings(b.notes);
  out["verified"] = b.verified();
  return out;
}

Json to_json(const AxiomReport& r) {
  Json violations = Json::array();
  for (const AxiomViolation& v : r.violations) {
    Json w = Json::array();
    for (const Element& e : v.witnesses) w.push_back(to_string(e));
    violations.push_back(Json{{"axiom", v.axiom}, {"witnesses", std::move(w)}});
  }
  Json out;
  out["ring"] = std::string(ring_name(r.ring));
  out["samples"] = r.samples;
  out["seed"] = r.seed;
  out["trichotomy_checks"] = r.trichotomy_checks;
  out["closure_checks"] = r.closure_checks;
  out["ring_law_checks"] = r.ring_law_checks;
  out["relation_checks"] = r.relation_checks;
  out["violations"] = std::move(violations);
  out["ok"] = r.ok();
  return out;
}

Json to_json(const RingDescriptor& d) {
  Json out;
  out["ring"] = std::string(ring_name(d.ring));
  out["is_commutative"] = d.is_commutative;
  out["is_division"] = d.is_division;
  out["smallest_positive"] =
      d.smallest_positive ? Json(to_string(*d.smallest_positive)) : Json(nullptr);
  return out;
}

Verdict parse_verdict(std::string_view name) {
  static constexpr Verdict all[] = {Verdict::Pass, Verdict::Violation, Verdict::NotApplicable,
                                    Verdict::Vacuous};
  return parse_enum(name, verdict_name, all, "verdict");
}

StatusKind parse_status_kind(std::string_view name) {
  static constexpr StatusKind all[] = {StatusKind::Infeasible, StatusKind::FeasibleUnboundedInBox,
                                       StatusKind::FeasibleBounded, StatusKind::Optimal};
  return parse_enum(name, status_name, all, "status");
}

Scope parse_scope(std::string_view name) {
  static constexpr Scope all[] = {Scope::Exhaustive, Scope::BoxLimited};
  return parse_enum(name, scope_name, all, "scope");
}

}  // namespace ordgap
