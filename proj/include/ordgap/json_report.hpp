#pragma once

// JSON views of reports, statuses and bundles. Ring elements always appear
// as canonical literals, and key order is fixed, so equal inputs give
// byte-identical documents.

#include <string_view>

#include <json.hpp>

#include "ordgap/axioms.hpp"
#include "ordgap/constructions.hpp"
#include "ordgap/enumeration.hpp"

namespace ordgap {

using Json = nlohmann::ordered_json;

Json to_json(const RVector& v);
Json to_json(const ProgramData& p);
Json to_json(const CheckReport& r);
Json to_json(const ProgramStatus& s);
Json to_json(const EdtClassification& e);
Json to_json(const WitnessSequence& s);
Json to_json(const CounterexampleBundle& b);
Json to_json(const AxiomReport& r);
Json to_json(const RingDescriptor& d);

/// Inverse of to_json(ProgramData). Throws ParseError.
ProgramData program_from_json(const Json& j);

/// Inverses of the enum names used in reports. Throw ParseError.
Verdict parse_verdict(std::string_view name);
StatusKind parse_status_kind(std::string_view name);
Scope parse_scope(std::string_view name);

}  // namespace ordgap
