#include "ordgap/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "ordgap/axioms.hpp"
#include "ordgap/constructions.hpp"
#include "ordgap/enumeration.hpp"
#include "ordgap/errors.hpp"
#include "ordgap/generators.hpp"
#include "ordgap/json_report.hpp"
#include "ordgap/program_io.hpp"

namespace ordgap::cli {

namespace {

// ---------------------------------------------------------------------------
// Human-readable output

void print_report(std::ostream& out, const CheckReport& r) {
  out << "[" << verdict_name(r.verdict) << "] " << r.check << '\n';
  for (const auto& [k, v] : r.facts) out << "    " << k << ": " << v << '\n';
  for (const auto& n : r.notes) out << "    note: " << n << '\n';
}

void print_program(std::ostream& out, const ProgramData& p) {
  std::istringstream lines(serialize_program(p));
  for (std::string line; std::getline(lines, line);) out << "  | " << line << '\n';
}

void print_status(std::ostream& out, std::string_view side, const ProgramStatus& s) {
  out << side << ": " << s.summary() << '\n';
  out << "    scanned " << s.points_scanned << " points, " << s.feasible_points << " feasible\n";
  for (const auto& n : s.notes) out << "    analytic: " << n << '\n';
}

void print_sequence(std::ostream& out, const WitnessSequence& seq) {
  out << sequence_role_name(seq.role) << " sequence over " << ring_name(seq.ring) << ":\n";
  for (std::size_t k = 0; k < seq.points.size(); ++k) {
    out << "    k=" << k << "  point " << to_string(seq.points[k]) << "  objective "
        << to_string(seq.objective_values[k]) << '\n';
  }
}

void print_bundle(std::ostream& out, const CounterexampleBundle& b) {
  out << "bundle " << bundle_kind_name(b.kind) << " over " << ring_name(b.program.ring()) << '\n';
  print_program(out, b.program);
  if (b.primal_point) out << "primal point x = " << to_string(*b.primal_point) << '\n';
  if (b.dual_point) out << "dual point y = " << to_string(*b.dual_point) << '\n';
  if (b.gap) out << "gap g(y) - f(x) = " << to_string(*b.gap) << '\n';
  if (b.sequence) print_sequence(out, *b.sequence);
  for (const CheckReport& c : b.checks) print_report(out, c);
  for (const auto& n : b.notes) out << "note: " << n << '\n';
  out << (b.verified() ? "verified" : "NOT verified") << '\n';
}

// ---------------------------------------------------------------------------
// Commands

struct Context {
  bool json = false;
  std::ostream& out;
};

int emit(const Context& ctx, const Json& doc, const std::function<void(std::ostream&)>& human,
         int code) {
  if (ctx.json) {
    ctx.out << doc.dump(2) << '\n';
  } else {
    human(ctx.out);
  }
  return code;
}

int cmd_rings(const Context& ctx) {
  Json doc = Json::array();
  for (RingId r : kAllRings) doc.push_back(to_json(describe(r)));
  return emit(ctx, doc, [](std::ostream& out) {
    out << "ring     commutative  division  smallest positive\n";
    for (RingId r : kAllRings) {
      const RingDescriptor d = describe(r);
      std::string name(ring_name(r));
      name.resize(9, ' ');
      out << name << (d.is_commutative ? "yes          " : "no           ")
          << (d.is_division ? "yes       " : "no        ")
          << (d.smallest_positive ? to_string(*d.smallest_positive) : "none") << '\n';
    }
  }, kOk);
}

int cmd_axioms(const Context& ctx, RingId ring, std::size_t samples, std::uint64_t seed) {
  const AxiomReport report = verify_order_axioms(ring, samples, seed);
  return emit(ctx, to_json(report), [&](std::ostream& out) {
    out << "ordered-ring axioms over " << ring_name(ring) << " (" << samples << " samples, seed "
        << seed << ")\n";
    out << "    trichotomy checks: " << report.trichotomy_checks << '\n';
    out << "    closure checks: " << report.closure_checks << '\n';
    out << "    associativity/distributivity checks: " << report.ring_law_checks << '\n';
    if (ring == RingId::Skew) out << "    relation yx = 2xy checks: " << report.relation_checks << '\n';
    for (const auto& v : report.violations) {
      out << "    VIOLATION " << v.axiom << ':';
      for (const auto& w : v.witnesses) out << ' ' << to_string(w);
      out << '\n';
    }
    out << (report.ok() ? "zero violations" : "violations found") << '\n';
  }, report.ok() ? kOk : kViolation);
}

std::string describe_verdict(const FeasibilityVerdict& v, std::string_view var) {
  if (v.feasible) return "feasible";
  const std::size_t idx = *v.violated_row + 1;
  if (*v.violation_kind == ViolationKind::NegativeVariable) {
    return "infeasible (" + std::string(var) + std::to_string(idx) + " < 0)";
  }
  return "infeasible (row " + std::to_string(idx) + ", slack negative)";
}

Json verdict_json(const FeasibilityVerdict& v) {
  Json out;
  out["feasible"] = v.feasible;
  out["violated_row"] = v.violated_row ? Json(*v.violated_row + 1) : Json(nullptr);
  out["violation_kind"] =
      v.violation_kind ? Json(*v.violation_kind == ViolationKind::NegativeVariable
                                  ? "NEGATIVE_VARIABLE"
                                  : "SLACK_NEGATIVE")
                       : Json(nullptr);
  return out;
}

int cmd_check(const Context& ctx, const std::string& file, const std::string& x_text,
              const std::string& y_text) {
  const ProgramData p = load_program(file);
  const RVector x = parse_vector(p.ring(), x_text);
  const RVector y = parse_vector(p.ring(), y_text);
  const auto [t, s] = slacks(p, x, y);
  const FeasibilityVerdict pv = is_primal_feasible(p, x);
  const FeasibilityVerdict dv = is_dual_feasible(p, y);
  const Element key = key_equation_residual(p, x, y);
  const Element dual_eq = duality_equation_residual(p, x, y);
  const CheckReport wd = assert_weak_duality(p, x, y);
  const bool ok = key.is_zero() && dual_eq.is_zero() && wd.ok();

  Json doc;
  doc["program"] = to_json(p);
  doc["x"] = to_json(x);
  doc["y"] = to_json(y);
  doc["primal"] = verdict_json(pv);
  doc["dual"] = verdict_json(dv);
  doc["t"] = to_json(t);
  doc["s"] = to_json(s);
  doc["f"] = to_string(eval_f(p, x));
  doc["g"] = to_string(eval_g(p, y));
  doc["gap"] = to_string(gap(p, x, y));
  doc["key_equation_residual"] = to_string(key);
  doc["duality_equation_residual"] = to_string(dual_eq);
  doc["weak_duality"] = to_json(wd);
  doc["ok"] = ok;
  return emit(ctx, doc, [&](std::ostream& out) {
    print_program(out, p);
    out << "x = " << to_string(x) << ": " << describe_verdict(pv, "x") << '\n';
    out << "y = " << to_string(y) << ": " << describe_verdict(dv, "y") << '\n';
    out << "primal slack t = " << to_string(t) << '\n';
    out << "dual slack s = " << to_string(s) << '\n';
    out << "f(x) = " << to_string(eval_f(p, x)) << ", g(y) = " << to_string(eval_g(p, y))
        << ", gap = " << to_string(gap(p, x, y)) << '\n';
    out << "key equation residual: " << to_string(key) << '\n';
    out << "duality equation residual: " << to_string(dual_eq) << '\n';
    print_report(out, wd);
  }, ok ? kOk : kViolation);
}

int cmd_identities(const Context& ctx, const std::string& file, std::size_t trials,
                   std::uint64_t seed) {
  const ProgramData p = load_program(file);
  Lcg64 rng(seed);
  std::size_t failures = 0;
  std::size_t feasible_pairs = 0;
  Json failing = Json::array();
  for (std::size_t k = 0; k < trials; ++k) {
    const RVector x = random_vector(p.ring(), p.cols(), rng);
    const RVector y = random_vector(p.ring(), p.rows(), rng);
    const Element key = key_equation_residual(p, x, y);
    const Element dual_eq = duality_equation_residual(p, x, y);
    if (is_primal_feasible(p, x).feasible && is_dual_feasible(p, y).feasible) ++feasible_pairs;
    if (!key.is_zero() || !dual_eq.is_zero()) {
      ++failures;
      failing.push_back(Json{{"trial", k},
                             {"x", to_json(x)},
                             {"y", to_json(y)},
                             {"key_equation_residual", to_string(key)},
                             {"duality_equation_residual", to_string(dual_eq)}});
    }
  }
  Json doc;
  doc["program"] = to_json(p);
  doc["trials"] = trials;
  doc["seed"] = seed;
  doc["feasible_pairs"] = feasible_pairs;
  doc["failures"] = failures;
  doc["failing"] = std::move(failing);
  return emit(ctx, doc, [&](std::ostream& out) {
    print_program(out, p);
    out << trials << " random (x, y) pairs, seed " << seed << " (" << feasible_pairs
        << " feasible)\n";
    out << "key equation residual nonzero: " << failures << '\n';
    out << "duality equation residual nonzero: " << failures << '\n';
    out << (failures == 0 ? "all residuals zero" : "RESIDUAL FAILURES") << '\n';
  }, failures == 0 ? kOk : kViolation);
}

BoxSpec make_box(std::uint32_t bound, std::uint32_t den) {
  BoxSpec box{.bound = bound};
  if (den != 0) box.denominator_bound = den;
  return box;
}

int cmd_enumerate(const Context& ctx, const std::string& file, const BoxSpec& box,
                  const std::string& side, unsigned threads) {
  const ProgramData p = load_program(file);
  const ScanOptions opts{.threads = threads};
  std::optional<ProgramStatus> primal;
  std::optional<ProgramStatus> dual;
  if (side != "dual") primal = enumerate_primal(p, box, opts);
  if (side != "primal") dual = enumerate_dual(p, box, opts);
  Json doc;
  doc["program"] = to_json(p);
  doc["box"] = box.bound;
  doc["denominator_bound"] = box.denominator_bound ? Json(*box.denominator_bound) : Json(nullptr);
  if (primal) doc["primal"] = to_json(*primal);
  if (dual) doc["dual"] = to_json(*dual);
  if (primal && dual && primal->witness && dual->witness) {
    doc["gap"] = to_string(gap(p, *primal->witness, *dual->witness));
  }
  return emit(ctx, doc, [&](std::ostream& out) {
    print_program(out, p);
    out << "box [0, " << box.bound << "]";
    if (box.denominator_bound) out << ", denominators <= " << *box.denominator_bound;
    out << '\n';
    if (primal) print_status(out, "primal", *primal);
    if (dual) print_status(out, "dual", *dual);
    if (doc.contains("gap")) out << "gap at the optima: " << doc["gap"].get<std::string>() << '\n';
  }, kOk);
}

int cmd_edt(const Context& ctx, const std::string& file, const BoxSpec& box, unsigned threads) {
  const ProgramData p = load_program(file);
  const EdtClassification edt = classify_edt(p, box, ScanOptions{.threads = threads});
  Json doc = to_json(edt);
  doc["program"] = to_json(p);
  return emit(ctx, doc, [&](std::ostream& out) {
    print_program(out, p);
    print_status(out, "primal", edt.primal);
    print_status(out, "dual", edt.dual);
    if (edt.violation()) {
      out << "Existence-Duality: VIOLATION (" << edt.details << ")\n";
    } else {
      out << "Existence-Duality: case " << *edt.edt_case << " (" << edt.details << ")\n";
    }
  }, kOk);
}

struct DemoArgs {
  std::string name;
  std::optional<RingId> ring;
  std::string a;
  std::string z;
  std::string p;
  std::size_t steps = 20;
  std::size_t samples = 500;
  std::uint64_t seed = 42;
};

Element elem_or(RingId ring, const std::string& text, const std::function<Element()>& fallback) {
  return text.empty() ? fallback() : parse_element(ring, text);
}

int cmd_demo(const Context& ctx, const DemoArgs& args) {
  static const std::map<std::string, std::pair<RingId, std::string>> demos = {
      {"strong-duality-gap", {RingId::Int, "Strong Duality fails over a ring with smallest positive 1"}},
      {"edt-infeasible-optimal", {RingId::Int, "Existence-Duality cases 2/3 fail: primal infeasible, dual optimal"}},
      {"edt-infeasible-optimal-transposed", {RingId::Int, "Existence-Duality cases 2/3 fail: dual infeasible, primal optimal"}},
      {"primal-no-optimum", {RingId::OddRat, "Existence-Duality case 4 fails: bounded feasible primal without optimum"}},
      {"dual-no-optimum", {RingId::Poly, "Existence-Duality case 4 fails: bounded feasible dual without optimum"}},
      {"noncommutative-gap", {RingId::Skew, "duality gap for every feasible pair over a non-commutative ring"}},
      {"center-betweenness", {RingId::Skew, "no central element lies strictly between ab and ba"}},
  };
  const auto it = demos.find(args.name);
  if (it == demos.end()) throw ParseError("unknown demo '" + args.name + "'");
  const RingId ring = args.ring.value_or(it->second.first);
  const std::string& title = it->second.second;
  const Element a = elem_or(ring, args.a, [&] { return default_nonunit(ring); });

  auto bundle_demo = [&](const CounterexampleBundle& b) {
    Json doc;
    doc["demo"] = args.name;
    doc["exhibits"] = title;
    doc["bundle"] = to_json(b);
    return emit(ctx, doc, [&](std::ostream& out) {
      out << "demo " << args.name << ": " << title << '\n';
      print_bundle(out, b);
    }, b.verified() ? kOk : kViolation);
  };

  if (args.name == "strong-duality-gap") {
    return bundle_demo(strong_duality_counterexample(ring, a));
  }
  if (args.name == "edt-infeasible-optimal") {
    return bundle_demo(infeasible_optimal_program(ring, a, InfeasibleSide::PrimalInfeasible));
  }
  if (args.name == "edt-infeasible-optimal-transposed") {
    return bundle_demo(infeasible_optimal_program(ring, a, InfeasibleSide::DualInfeasible));
  }
  if (args.name == "primal-no-optimum") {
    const Element z = elem_or(ring, args.z, [&] { return Element::constant(ring, Rational(1, 3)); });
    return bundle_demo(non_achieving_primal(a, z, args.steps));
  }
  if (args.name == "dual-no-optimum") {
    const Element p = elem_or(ring, args.p, [&] { return Element::constant(ring, Rational(1, 2)); });
    return bundle_demo(non_achieving_dual(a, p, args.steps));
  }
  if (args.name == "noncommutative-gap") {
    if (describe(ring).is_commutative) {
      throw PreconditionViolated(std::string(ring_name(ring)) + " is commutative");
    }
    return bundle_demo(gap_program(ring, a, args.seed));
  }

  // center-betweenness
  Element b = ring == RingId::Skew   ? Element::skew_y()
              : ring == RingId::Poly ? Element::poly_x() + Element::one(ring)
                                     : Element::constant(ring, Rational(3));
  Lcg64 rng(args.seed);
  std::size_t passed = 0;
  std::vector<CheckReport> failures;
  for (std::size_t k = 0; k < args.samples; ++k) {
    // Constants are the central elements of SKEW; every element is central elsewhere.
    const Element z = ring == RingId::Skew
                          ? Element::constant(ring, *sample(RingId::Rat, rng).constant_value())
                          : sample(ring, rng);
    CheckReport r = no_central_between_check(a, b, z);
    if (r.ok()) {
      ++passed;
    } else {
      failures.push_back(std::move(r));
    }
  }
  const CheckReport magnitude = magnitude_gap_check(a, b);
  const bool ok = failures.empty() && magnitude.ok();
  Json doc;
  doc["demo"] = args.name;
  doc["exhibits"] = title;
  doc["ring"] = std::string(ring_name(ring));
  doc["a"] = to_string(a);
  doc["b"] = to_string(b);
  doc["ab"] = to_string(a * b);
  doc["ba"] = to_string(b * a);
  doc["samples"] = args.samples;
  doc["seed"] = args.seed;
  doc["passed"] = passed;
  Json fails = Json::array();
  for (const auto& f : failures) fails.push_back(to_json(f));
  doc["failures"] = std::move(fails);
  doc["magnitude_check"] = to_json(magnitude);
  doc["ok"] = ok;
  return emit(ctx, doc, [&](std::ostream& out) {
    out << "demo " << args.name << ": " << title << '\n';
    out << "a = " << to_string(a) << ", b = " << to_string(b) << '\n';
    out << "ab = " << to_string(a * b) << ", ba = " << to_string(b * a) << '\n';
    out << "central samples: " << passed << " of " << args.samples << " pass\n";
    for (const auto& f : failures) print_report(out, f);
    print_report(out, magnitude);
  }, ok ? kOk : kViolation);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact primal-dual affine programs over ordered rings", "ordgap"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit a machine-readable JSON report");

  auto* rings = app.add_subcommand("rings", "Capabilities of the built-in rings");

  std::string ring_text = "int";
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  auto* axioms = app.add_subcommand("axioms", "Seeded ordered-ring axiom suite");
  axioms->add_option("--ring", ring_text, "Ring id")->required();
  axioms->add_option("--samples", samples, "Number of sampled triples");
  axioms->add_option("--seed", seed, "PRNG seed");

  std::string file;
  std::string x_text;
  std::string y_text;
  auto* check = app.add_subcommand("check", "Feasibility, slacks, gap and identities at (x, y)");
  check->add_option("file", file, "Program file")->required();
  check->add_option("--x", x_text, "Primal point, whitespace-separated literals")->required();
  check->add_option("--y", y_text, "Dual point, whitespace-separated literals")->required();

  std::size_t trials = 500;
  std::uint64_t id_seed = 1;
  auto* identities = app.add_subcommand("identities", "Key and duality equations on random points");
  identities->add_option("file", file, "Program file")->required();
  identities->add_option("--trials", trials, "Number of random (x, y) pairs");
  identities->add_option("--seed", id_seed, "PRNG seed");

  std::uint32_t box = 10;
  std::uint32_t den = 0;
  std::string side = "both";
  unsigned threads = 1;
  auto* enumerate = app.add_subcommand("enumerate", "Brute-force scan of a box");
  enumerate->add_option("file", file, "Program file")->required();
  enumerate->add_option("--box", box, "Each variable ranges over [0, N]")->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--den", den, "Denominator bound for rat/oddrat")->check(CLI::PositiveNumber);
  enumerate->add_option("--side", side, "primal, dual or both")
      ->check(CLI::IsMember({"primal", "dual", "both"}));
  enumerate->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* edt = app.add_subcommand("edt", "Existence-Duality classification over a box");
  edt->add_option("file", file, "Program file")->required();
  edt->add_option("--box", box, "Each variable ranges over [0, N]")->required()
      ->check(CLI::PositiveNumber);
  edt->add_option("--den", den, "Denominator bound for rat/oddrat")->check(CLI::PositiveNumber);
  edt->add_option("--threads", threads, "Worker threads (0 = all cores)");

  DemoArgs demo_args;
  std::string demo_ring;
  auto* demo = app.add_subcommand("demo", "Counterexample constructions");
  demo->add_option("name", demo_args.name, "Demo name")
      ->required()
      ->check(CLI::IsMember({"strong-duality-gap", "edt-infeasible-optimal",
                             "edt-infeasible-optimal-transposed", "primal-no-optimum",
                             "dual-no-optimum", "noncommutative-gap", "center-betweenness"}));
  demo->add_option("--ring", demo_ring, "Ring id (each demo has a default)");
  demo->add_option("--a", demo_args.a, "Positive non-unit a");
  demo->add_option("--z", demo_args.z, "Improving-step witness z with 0 < a*z < 1");
  demo->add_option("--p", demo_args.p, "Decreasing-step factor p with 0 < p < 1");
  demo->add_option("--steps", demo_args.steps, "Sequence length");
  demo->add_option("--samples", demo_args.samples, "Sampled central elements");
  demo->add_option("--seed", demo_args.seed, "PRNG seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  const Context ctx{json, out};
  try {
    if (*rings) return cmd_rings(ctx);
    if (*axioms) return cmd_axioms(ctx, parse_ring_name(ring_text), samples, seed);
    if (*check) return cmd_check(ctx, file, x_text, y_text);
    if (*identities) return cmd_identities(ctx, file, trials, id_seed);
    if (*enumerate) return cmd_enumerate(ctx, file, make_box(box, den), side, threads);
    if (*edt) return cmd_edt(ctx, file, make_box(box, den), threads);
    if (*demo) {
      if (!demo_ring.empty()) demo_args.ring = parse_ring_name(demo_ring);
      return cmd_demo(ctx, demo_args);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionViolated& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const StepLosesFeasibility& e) {
    err << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ordgap::cli
