#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dpb/identities.hpp"
#include "dpb/umbral.hpp"

namespace dpb {

/// One row of a CLI table: a family value with exact text.
struct OutputRecord {
    std::string family;
    int n = 0;
    std::optional<int> k;
    std::string lambda = "symbolic"; ///< "symbolic" or the substituted value "p/q"
    std::string value;               ///< canonical polynomial or rational string

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

nlohmann::json to_json(const OutputRecord& r);
OutputRecord output_record_from_json(const nlohmann::json& j);

/// {"identity", "params": {n_min, n_max, k_min, k_max}, "status",
///  "counterexample": null | {n, k, lhs, rhs, note}, "cells", "last"}.
nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const std::vector<Report>& reports);

/// {"n", "k", "coefficients": [canonical strings, a_0 first]}.
nlohmann::json to_json(const BasisExpansion& e);
BasisExpansion expansion_from_json(const nlohmann::json& j);

} // namespace dpb
