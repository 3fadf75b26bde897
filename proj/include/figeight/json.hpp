#pragma once

#include <json.hpp>

#include "figeight/classification.hpp"
#include "figeight/surgery_enum.hpp"
#include "figeight/torus_dynamics.hpp"

namespace figeight {

using Json = nlohmann::ordered_json;

// Exact values travel as strings; counts and scales as JSON integers.
Json to_json(const ClassificationResult& r);
Json to_json(const ContactStructureCert& c);
Json to_json(const ThickeningPath& p);
Json to_json(const LegendrianChain& c);
Json to_json(const StabilizationTuple& t);

}  // namespace figeight
