#pragma once

#include <json.hpp>

#include "gammalab/lab.hpp"

namespace gammalab::report {

using Json = nlohmann::ordered_json;

Json to_json(Subset s);
Json to_json(const Witness& w);
Json to_json(const LabConfig& c);
Json to_json(const InstanceRecipe& r);
Json to_json(const Verdict& v);
Json to_json(const Summary& s);

}  // namespace gammalab::report
