#pragma once

#include "homeoforge/gline.hpp"
#include "homeoforge/ring.hpp"

#include <json.hpp>

namespace homeoforge {

using json = nlohmann::json;

// All scalars serialize in exact textual form; no floating point appears in
// any certificate.

json to_json(const QuadScalar& v);
json to_json(const Interval& v);
json to_json(const PLSegmentMap& m);    // {"breaks": [["x","y"], ...]}
json to_json(const PeriodizedMap& m);   // + "period"
json to_json(const CircleMap& m);       // + "circumference"
json to_json(const Word& w);            // [{"id":..., "exp":...}, ...]
json to_json(const CircleArc& a);

QuadScalar scalar_from_json(const json& j);
PLSegmentMap segment_from_json(const json& j);
PeriodizedMap periodized_from_json(const json& j);
CircleMap circle_from_json(const json& j);
Word word_from_json(const json& j);

/// {"n":..., "circumference":"...", "intervals":[...], "generators":[...]}
json ring_config_to_json(const RingConfig& config);
RingConfig ring_config_from_json(const json& j);

json star_check_to_json(const StarCheck& check);
json small_family_to_json(const SmallFamily& fam);
json nu_family_to_json(const NuFamily& nu);
json surgery_to_json(const SurgeryResult& res);
json zeta_to_json(const ZetaResult& res);
json stability_to_json(const StabilityCertificate& cert);
json realize_to_json(const RealizeResult& res);
json winding_to_json(const WindingReport& rep);

}  // namespace homeoforge
