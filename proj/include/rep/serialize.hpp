#pragma once

#include <json.hpp>

#include "rep/numeric.hpp"
#include "rep/restriction.hpp"

namespace rep {

using json = nlohmann::ordered_json;

// Composition factor record: {"tag","i","j","lambda","sigma","n"}, with
// "dualized" added for factors reached through the lambda -> -lambda symmetry.
json factor_to_json(const CompositionFactor& f);
CompositionFactor factor_from_json(const json& j);

// Scalar table of a diagonal multiplier: {"power": "...", "coefficients":
// {"<tau csv>": "<rational>", ...}}.
json multiplier_to_json(const MultiplierDescription& m);
MultiplierDescription multiplier_from_json(const json& j);

json inner_product_table_to_json(const InnerProductTable& t);

// {"verdict","n","sigma","lambda","factors":[{...,"unitarizable","reason"}]}
json classification_to_json(const ClassificationResult& r);

json dual_item_to_json(const DualItem& item, const ParamContext& ctx);

// {"factor": {...}, "constituents": [{"tau","mult"}...], "whittaker_dim": N}
json restriction_to_json(const CompositionFactor& f);

json report_to_json(const VerificationReport& r);

// Wraps a payload with the versioned envelope {"schema":"1", ...}.
json with_schema(json payload);

}  // namespace rep
