#include "partpat/json_io.hpp"

namespace partpat::io {

json partition_to_json(const SetPartition& pi) { return to_string(pi); }

SetPartition partition_from_json(const json& j) {
    return parse_partition(j.get<std::string>());
}

json sequence_to_json(const std::vector<mpz_class>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.get_str());
    return out;
}

std::vector<mpz_class> sequence_from_json(const json& j) {
    std::vector<mpz_class> out;
    out.reserve(j.size());
    for (const auto& item : j) out.emplace_back(item.get<std::string>());
    return out;
}

json profile_to_json(const AvoidanceProfile& profile) {
    json patterns = json::array();
    for (const auto& p : profile.patterns) patterns.push_back(partition_to_json(p));
    return json{{"patterns", patterns},
                {"notion", notion_name(profile.notion)},
                {"counts", sequence_to_json(profile.counts)}};
}

AvoidanceProfile profile_from_json(const json& j) {
    AvoidanceProfile profile;
    for (const auto& p : j.at("patterns")) profile.patterns.push_back(partition_from_json(p));
    profile.notion = notion_from_name(j.at("notion").get<std::string>());
    profile.counts = sequence_from_json(j.at("counts"));
    return profile;
}

json recurrence_to_json(const PRecurrence& rec) {
    json polys = json::array();
    for (const auto& p : rec.polynomials()) {
        json coeffs = json::array();
        for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
        polys.push_back(coeffs);
    }
    return json{{"order", rec.order()}, {"degree", rec.degree()}, {"polynomials", polys}};
}

PRecurrence recurrence_from_json(const json& j) {
    std::vector<IntPoly> polys;
    for (const auto& p : j.at("polynomials")) {
        std::vector<mpz_class> coeffs;
        for (const auto& c : p) coeffs.emplace_back(c.get<std::string>());
        polys.emplace_back(std::move(coeffs));
    }
    return PRecurrence(std::move(polys));
}

json envelope(const std::string& command, json params, json result) {
    return json{{"command", command},
                {"params", std::move(params)},
                {"result", std::move(result)},
                {"version", "1"}};
}

} // namespace partpat::io
