#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordgap/ring.hpp"

namespace ordgap {

enum class Verdict {
  Pass,
  Violation,      // the checked statement failed: an implementation bug or a refuted claim
  NotApplicable,  // inputs outside the statement's hypotheses
  Vacuous,        // hypotheses hold trivially or are not met; nothing to assert
};

std::string_view verdict_name(Verdict v);

/// Outcome of one checked statement. Ring elements in `facts` are kept in
/// canonical text form so reports are stable and serializable.
struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::Pass;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> notes;

  bool ok() const { return verdict != Verdict::Violation; }

  void add(std::string label, const Element& value) {
    facts.emplace_back(std::move(label), to_string(value));
  }
  void add(std::string label, std::string value) {
    facts.emplace_back(std::move(label), std::move(value));
  }
  /// Value of the first fact with this label, or empty.
  std::string fact(std::string_view label) const {
    for (const auto& [k, v] : facts) {
      if (k == label) return v;
    }
    return {};
  }
};

}  // namespace ordgap
