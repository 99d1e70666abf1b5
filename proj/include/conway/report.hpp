#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "conway/classify.hpp"
#include "conway/design.hpp"
#include "conway/perm_group.hpp"

namespace conway {

nlohmann::json ToJson(const ValidationReport& report);
nlohmann::json ToJson(const Signature& sig);
nlohmann::json ToJson(const ConsistencyReport& report);
nlohmann::json ToJson(const CriterionResult& result);

// Full hole-stabilizer report: design hash, the point re-indexing, the
// generators in 1-based cycle notation over the n-1 remaining points, the
// signature, the recognized name and every applicable consistency check.
nlohmann::json HoleStabilizerReport(const Design& d, Point hole, const Group& group);

std::string FormatSignature(const Signature& sig);

}  // namespace conway
