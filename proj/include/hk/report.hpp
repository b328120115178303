#pragma once

#include <string>

#include <json.hpp>

#include "hk/conjectures.hpp"
#include "hk/sweep.hpp"

namespace hk {

/// Key order is insertion order, so serialized output is deterministic.
using Json = nlohmann::ordered_json;

/// Exact values are always strings: "12", "-3/4", "-3*a^2*b + t".
Json to_json(const Scalar& v);

Json to_json(const SweepCell& c);
Json to_json(const SweepSummary& s);
Json to_json(const ConjectureCell& c, ConjectureId id);
Json to_json(const ConjectureSummary& s);

/// One header row, then one row per element of `cells` (an array of
/// objects). Columns follow first appearance of each key; nested values are
/// written as compact JSON text.
std::string to_csv(const Json& cells);

}  // namespace hk
