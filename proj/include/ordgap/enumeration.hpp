#pragma once

// Brute-force scans of a program over a finite box of nonnegative values.
// Only INT, RAT and ODDRAT are enumerable.
//
// A scan never claims more than it checked: its scope is EXHAUSTIVE only
// when simple analytic bounds show that every feasible (or every optimal
// candidate) point lies inside the box. The bounds used are
//
//   - a row sum_k a_k v_k <= r with all a_k >= 0 and v >= 0 bounds each
//     v_k with a_k > 0 by r / a_k, and is infeasible outright when r < 0;
//   - the objective level set of the best value found, when it has the
//     same shape (e.g. minimizing y.b with b >= 0).
//
// Every variable bounded within the box gives EXHAUSTIVE. For INT a bound
// u is covered when floor(u) <= N; for the dense rings only u <= 0 is.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordgap/affine.hpp"
#include "ordgap/report.hpp"

namespace ordgap {

struct BoxSpec {
  /// Each variable ranges over [0, bound].
  std::uint32_t bound = 10;
  /// RAT/ODDRAT: denominators 1..D (odd only for ODDRAT). Defaults to 1.
  std::optional<std::uint32_t> denominator_bound;
};

enum class StatusKind { Infeasible, FeasibleUnboundedInBox, FeasibleBounded, Optimal };
enum class Scope { Exhaustive, BoxLimited };

std::string_view status_name(StatusKind k);
std::string_view scope_name(Scope s);

struct ProgramStatus {
  StatusKind kind = StatusKind::Infeasible;
  Scope scope = Scope::BoxLimited;
  /// Lexicographically smallest optimal in-box point, when feasible.
  std::optional<RVector> witness;
  std::optional<Element> value;
  std::size_t points_scanned = 0;
  std::size_t feasible_points = 0;
  /// Analytic facts that justified the scope.
  std::vector<std::string> notes;

  /// One-line human summary, e.g. "OPTIMAL x=[0] value 0 (exhaustive)".
  std::string summary() const;
};

struct ScanOptions {
  /// Worker threads; 0 picks hardware concurrency. Results do not depend on it.
  unsigned threads = 1;
};

bool is_enumerable(RingId ring);

/// Sorted, deduplicated per-variable values of the box.
std::vector<Element> box_values(RingId ring, const BoxSpec& box);

ProgramStatus enumerate_primal(const ProgramData& p, const BoxSpec& box, ScanOptions opts = {});
ProgramStatus enumerate_dual(const ProgramData& p, const BoxSpec& box, ScanOptions opts = {});

/// Confirms that each supplied point is feasible and that no in-box feasible
/// point strictly beats it; reports the gap when both are supplied and the
/// other side's status when one is omitted. Violation = not certified.
CheckReport certify_optimal_pair(const ProgramData& p, const std::optional<RVector>& x_star,
                                 const std::optional<RVector>& y_star, const BoxSpec& box,
                                 ScanOptions opts = {});

struct EdtClassification {
  /// Classical case 1..4, or nullopt when the joint status fits none of them.
  std::optional<int> edt_case;
  ProgramStatus primal;
  ProgramStatus dual;
  /// g - f at the two witnesses when both sides are OPTIMAL.
  std::optional<Element> gap;
  std::string details;

  bool violation() const { return !edt_case.has_value(); }
  Scope scope() const {
    return primal.scope == Scope::Exhaustive && dual.scope == Scope::Exhaustive
               ? Scope::Exhaustive
               : Scope::BoxLimited;
  }
};

/// Maps the joint primal/dual scan outcome onto the four classical cases:
///   1 both infeasible, 2 primal infeasible and dual unbounded,
///   3 dual infeasible and primal unbounded, 4 both optimal.
EdtClassification classify_edt(const ProgramData& p, const BoxSpec& box, ScanOptions opts = {});

}  // namespace ordgap
