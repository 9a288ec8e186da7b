#pragma once

#include <json.hpp>

#include "hyperslice/cauchy.hpp"
#include "hyperslice/regularity.hpp"
#include "hyperslice/zeros.hpp"

namespace hyperslice {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "hyperslice/1";

/// Sparse multiplication table with exact "p/q" entries; loads back through from_table.
Json algebra_to_json(const AlgebraDef& alg);
Algebra algebra_from_json(const Json& j);

Json element_to_json(const Element& a);
Json element_to_json(const ExactElement& a);
/// Array of dim numbers or exact strings.
Element element_from_json(const Json& j, const Algebra& alg);

Json polynomial_to_json(const OrderedPolynomial& p);
Json stem_to_json(const StemPoly& F);
Json zero_report_to_json(const ZeroReport& r);
Json cauchy_result_to_json(const CauchyResult& r);

}  // namespace hyperslice
