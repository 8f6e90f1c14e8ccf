#pragma once

#include <json.hpp>

#include "gallai/blocks.hpp"
#include "gallai/comb.hpp"
#include "gallai/hamiltonicity.hpp"
#include "gallai/paths.hpp"
#include "gallai/proof_engine.hpp"

namespace gallai {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "gallai-report/1";

Json to_json(const VertexPath& p);
Json to_json(const LongestPathReport& r, bool with_paths);
Json to_json(const GallaiVerdict& v);
Json to_json(const KTupleVerdict& v);
Json to_json(const BlockCutTree& t);
Json to_json(const HamiltonicityVerdict& v);
Json to_json(const CombDecomposition& d);
Json to_json(const ClaimReport& r);
Json to_json(const Certificate& c);

// Inverse of to_json(Certificate). Throws ParseError on missing or
// ill-typed fields.
Certificate certificate_from_json(const Json& j);
CombDecomposition comb_from_json(const Json& j);

}  // namespace gallai
