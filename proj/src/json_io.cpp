#include "dpb/json_io.hpp"

namespace dpb {

using nlohmann::json;

json to_json(const OutputRecord& r)
{
    json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["k"] = r.k ? json(*r.k) : json(nullptr);
    j["lambda"] = r.lambda;
    j["value"] = r.value;
    return j;
}

OutputRecord output_record_from_json(const json& j)
{
    OutputRecord r;
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<int>();
    if (!j.at("k").is_null()) {
        r.k = j.at("k").get<int>();
    }
    r.lambda = j.at("lambda").get<std::string>();
    r.value = j.at("value").get<std::string>();
    return r;
}

json to_json(const Report& r)
{
    json params;
    params["n_min"] = r.n_min;
    params["n_max"] = r.n_max;
    params["k_min"] = r.k_range ? json(r.k_range->min) : json(nullptr);
    params["k_max"] = r.k_range ? json(r.k_range->max) : json(nullptr);

    json j;
    j["identity"] = std::string(identity_name(r.identity));
    j["params"] = params;
    j["status"] = r.passed ? "pass" : "fail";
    j["cells"] = r.cells;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        j["counterexample"] = {{"n", c.n},
                               {"k", c.k ? json(*c.k) : json(nullptr)},
                               {"lhs", canonical_string(c.lhs)},
                               {"rhs", canonical_string(c.rhs)},
                               {"note", c.note}};
    } else {
        j["counterexample"] = nullptr;
    }
    if (r.last) {
        j["last"] = {{"n", r.last->n},
                     {"k", r.last->k ? json(*r.last->k) : json(nullptr)},
                     {"value", canonical_string(r.last->value)}};
    } else {
        j["last"] = nullptr;
    }
    return j;
}

json to_json(const std::vector<Report>& reports)
{
    json arr = json::array();
    for (const auto& r : reports) {
        arr.push_back(to_json(r));
    }
    return arr;
}

json to_json(const BasisExpansion& e)
{
    json coeffs = json::array();
    for (const auto& c : e.coefficients) {
        coeffs.push_back(canonical_string(c));
    }
    return {{"n", e.n}, {"k", e.k}, {"coefficients", coeffs}};
}

BasisExpansion expansion_from_json(const json& j)
{
    BasisExpansion e;
    e.n = j.at("n").get<int>();
    e.k = j.at("k").get<int>();
    for (const auto& c : j.at("coefficients")) {
        e.coefficients.push_back(BiPoly::parse(c.get<std::string>()));
    }
    return e;
}

} // namespace dpb
