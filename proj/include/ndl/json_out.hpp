#ifndef NDL_JSON_OUT_HPP
#define NDL_JSON_OUT_HPP

#include <json.hpp>

#include "ndl/anomaly.hpp"
#include "ndl/oracle.hpp"
#include "ndl/profiles.hpp"
#include "ndl/transform.hpp"

namespace ndl {

// Stable key order everywhere: CLI output must be byte-deterministic.
using Json = nlohmann::ordered_json;

Json to_json(const DegreeList& l);
Json to_json(const ProfileSet& p);
Json to_json(const TwoSwitch& s);
Json to_json(const SwitchSequence& seq);
Json to_json(const ProofGapEvent& e);
Json to_json(const TransformTelemetry& t);
Json to_json(const TransformResult& r);
Json to_json(const TransformOutcome& o);
Json to_json(const AnomalyScore& s);
// include_elapsed=false keeps the serialization reproducible run to run.
Json to_json(const VerificationReport& r, bool include_elapsed = true);

} // namespace ndl

#endif
