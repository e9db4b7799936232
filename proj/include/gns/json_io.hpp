#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "gns/bounds.hpp"
#include "gns/classify.hpp"
#include "gns/gap_set.hpp"
#include "gns/order.hpp"
#include "gns/point.hpp"

namespace gns {

inline constexpr const char* kToolVersion = "0.3.1";

nlohmann::json to_json(const Point& p);
nlohmann::json to_json(std::span<const Point> points);

/// {"d": <int>, "gaps": [[...], ...]}
nlohmann::json gap_set_to_json(const GapSet& s);

/// Parses and validates a gap-set document. Throws MalformedInput for
/// schema problems, DuplicatePoint, and the validate() errors.
GapSet gap_set_from_json(const nlohmann::json& doc);
GapSet gap_set_from_text(std::string_view text);

/// {"type": "maximal-gap", "h": [...]}
nlohmann::json order_to_json(const MaximalGapOrder& order);

nlohmann::json classification_to_json(const Classification& c);
nlohmann::json pf_graph_to_json(const PFGraph& g);
nlohmann::json sandwich_to_json(const SandwichReport& r);

/// Decimal string for a big integer.
std::string big_to_string(const BigInt& v);

}  // namespace gns
