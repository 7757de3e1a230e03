#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ordgap/cli.hpp"
#include "ordgap/json_report.hpp"
#include "support.hpp"

using namespace ordgap;
using testsupport::fixture;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* const kDemos[] = {"strong-duality-gap",   "edt-infeasible-optimal",
                              "edt-infeasible-optimal-transposed", "primal-no-optimum",
                              "dual-no-optimum",      "noncommutative-gap",
                              "center-betweenness"};

}  // namespace

TEST_CASE("strong-duality-gap demo") {
  const Run r = run({"demo", "strong-duality-gap", "--ring", "int"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("primal point x = [0]") != std::string::npos);
  CHECK(r.out.find("dual point y = [1]") != std::string::npos);
  CHECK(r.out.find("gap g(y) - f(x) = 1") != std::string::npos);
  CHECK(r.out.find("Strong Duality") != std::string::npos);
}

TEST_CASE("edt reports the violation and exits 0") {
  const Run r = run({"edt", fixture("edt_fail.prog"), "--box", "10"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("VIOLATION") != std::string::npos);
  const Json j = run_json({"edt", fixture("edt_fail.prog"), "--box", "10"});
  CHECK(j["case"] == "VIOLATION");
  CHECK(parse_status_kind(j["primal"]["status"].get<std::string>()) == StatusKind::Infeasible);
  CHECK(parse_status_kind(j["dual"]["status"].get<std::string>()) == StatusKind::Optimal);
  CHECK(j["dual"]["witness"] == Json::array({"0", "0"}));
}

TEST_CASE("identities on the gap program") {
  const Run r = run({"identities", fixture("ce_sd.prog"), "--trials", "500", "--seed", "1"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("all residuals zero") != std::string::npos);
  const Json j = run_json({"identities", fixture("skew_2x2.prog"), "--trials", "200"});
  CHECK(j["failures"] == 0);
}

TEST_CASE("exit codes over the fixture matrix") {
  const char* const progs[] = {"ce_sd.prog",        "ce_sd_rat.prog",           "ce_sd_oddrat.prog",
                               "edt_fail.prog",     "edt_fail_rat.prog",        "edt_fail_transposed.prog",
                               "mixed_int.prog",    "mixed_rat.prog"};
  for (const char* p : progs) {
    CAPTURE(p);
    CHECK(run({"identities", fixture(p), "--trials", "50"}).code == cli::kOk);
    CHECK(run({"enumerate", fixture(p), "--box", "3", "--den", "2"}).code == cli::kOk);
    CHECK(run({"edt", fixture(p), "--box", "3", "--den", "2"}).code == cli::kOk);
  }
  for (const char* p : {"gap_poly.prog", "gap_skew.prog", "skew_2x2.prog"}) {
    CAPTURE(p);
    CHECK(run({"identities", fixture(p), "--trials", "50"}).code == cli::kOk);
    CHECK(run({"edt", fixture(p), "--box", "3"}).code == cli::kPrecondition);
  }
  for (const char* d : kDemos) {
    CAPTURE(d);
    CHECK(run({"demo", d, "--steps", "5", "--samples", "50"}).code == cli::kOk);
  }
  for (RingId r : kAllRings) {
    CHECK(run({"axioms", "--ring", std::string(ring_name(r)), "--samples", "100"}).code == cli::kOk);
  }
  CHECK(run({"rings"}).code == cli::kOk);

  CHECK(run({"check", fixture("ce_sd.prog"), "--x", "0", "--y", "1"}).code == cli::kOk);
  CHECK(run({"check", fixture("ce_sd.prog"), "--x", "5", "--y", "0"}).code == cli::kOk);

  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"edt", fixture("ce_sd.prog")}).code == cli::kUsageError);
  CHECK(run({"edt", fixture("ce_sd.prog"), "--box", "zero"}).code == cli::kUsageError);
  CHECK(run({"edt", fixture("no_such.prog"), "--box", "3"}).code == cli::kUsageError);
  CHECK(run({"axioms", "--ring", "real"}).code == cli::kUsageError);
  CHECK(run({"check", fixture("ce_sd.prog"), "--x", "1/2", "--y", "1"}).code == cli::kUsageError);
  CHECK(run({"check", fixture("ce_sd.prog"), "--x", "0 0", "--y", "1"}).code != cli::kOk);
  CHECK(run({"demo", "no-such-demo"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kOk);

  CHECK(run({"demo", "strong-duality-gap", "--ring", "rat"}).code == cli::kPrecondition);
  CHECK(run({"demo", "strong-duality-gap", "--ring", "poly"}).code == cli::kPrecondition);
  CHECK(run({"demo", "noncommutative-gap", "--ring", "int"}).code == cli::kPrecondition);
  CHECK(run({"demo", "dual-no-optimum", "--ring", "int"}).code == cli::kPrecondition);
  CHECK(run({"demo", "primal-no-optimum", "--ring", "rat"}).code == cli::kPrecondition);
}

TEST_CASE("a step that loses feasibility exits 1") {
  // y = 1 scaled by 1/3 gives 2y = 2/3 < 1.
  const Run r = run({"demo", "dual-no-optimum", "--ring", "oddrat", "--p", "1/3"});
  CHECK(r.code == cli::kViolation);
  CHECK(r.err.find("violates dual row 1") != std::string::npos);
  CHECK(run({"demo", "primal-no-optimum", "--ring", "int", "--z", "1"}).code == cli::kPrecondition);
}

TEST_CASE("golden reports") {
  struct Golden {
    const char* file;
    std::vector<std::string> args;
  };
  const std::vector<Golden> goldens = {
      {"demo_strong_duality_gap.json", {"demo", "strong-duality-gap"}},
      {"edt_edt_fail.json", {"edt", "edt_fail.prog", "--box", "10"}},
      {"enumerate_ce_sd_rat.json", {"enumerate", "ce_sd_rat.prog", "--box", "2", "--den", "2"}},
      {"check_ce_sd.json", {"check", "ce_sd.prog", "--x", "0", "--y", "1"}},
  };
  for (const Golden& g : goldens) {
    CAPTURE(g.file);
    std::vector<std::string> args = g.args;
    for (auto& a : args) {
      if (a.ends_with(".prog")) a = fixture(a);
    }
    args.insert(args.begin(), "--json");
    const Run r = run(args);
    const std::string expected = slurp(fixture(std::string("golden/") + g.file));
    // Paths differ between machines only in the program files, which are
    // not echoed, so the documents match byte for byte.
    CHECK(r.out == expected);
    const Json j = Json::parse(expected);
    if (j.contains("bundle")) {
      for (const Json& c : j["bundle"]["checks"]) {
        CHECK(parse_verdict(c["verdict"].get<std::string>()) == Verdict::Pass);
      }
      CHECK(j["bundle"]["gap"] == "1");
    }
    if (j.contains("weak_duality")) {
      CHECK(parse_verdict(j["weak_duality"]["verdict"].get<std::string>()) == Verdict::Pass);
      CHECK(j["gap"] == "1");
    }
    if (j.contains("primal") && j["primal"].contains("status")) {
      CHECK_NOTHROW(parse_status_kind(j["primal"]["status"].get<std::string>()));
      CHECK_NOTHROW(parse_scope(j["primal"]["scope"].get<std::string>()));
    }
  }
}

TEST_CASE("JSON reports carry canonical literals") {
  const Json j = run_json({"demo", "dual-no-optimum", "--steps", "3"});
  for (const Json& v : j["bundle"]["sequence"]["objective_values"]) {
    const std::string s = v.get<std::string>();
    CHECK(to_string(parse_element(RingId::Poly, s)) == s);
  }
  CHECK(program_from_json(j["bundle"]["program"]).ring() == RingId::Poly);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::vector<std::string>> cmds = {
      {"--json", "axioms", "--ring", "skew", "--samples", "200", "--seed", "9"},
      {"--json", "identities", fixture("skew_2x2.prog"), "--trials", "100", "--seed", "3"},
      {"--json", "demo", "center-betweenness", "--samples", "100", "--seed", "5"},
      {"--json", "demo", "noncommutative-gap", "--seed", "5"},
      {"--json", "edt", fixture("mixed_int.prog"), "--box", "6"},
  };
  for (const auto& c : cmds) {
    CHECK(run(c).out == run(c).out);
  }
  const Run one = run({"--json", "enumerate", fixture("mixed_rat.prog"), "--box", "4", "--den", "3"});
  const Run four = run({"--json", "enumerate", fixture("mixed_rat.prog"), "--box", "4", "--den", "3",
                        "--threads", "4"});
  CHECK(one.out == four.out);
}
