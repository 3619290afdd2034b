#include "xm/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace xm {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
    return Partition(j.get<std::vector<int>>());
}

json to_json(const Laurent& p) {
    json out = json::object();
    for (const auto& [e, c] : p.terms()) {
        if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
            throw std::overflow_error("laurent coefficient exceeds JSON integer range");
        out[std::to_string(e)] = c.convert_to<long long>();
    }
    return out;
}

Laurent laurent_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("laurent JSON must be an object");
    Laurent p;
    for (const auto& [key, value] : j.items())
        p.add_term(std::stol(key), BigInt(value.get<long long>()));
    return p;
}

CartanType type_from_json(const json& j) {
    const std::string family = j.at("type").get<std::string>();
    const int rank = j.at("rank").get<int>();
    if (family == "A") return type_a(rank);
    if (family == "D") return type_d(rank);
    throw std::invalid_argument("unknown type '" + family + "'");
}

json to_json(const Path& p) {
    std::vector<int> letters;
    letters.reserve(p.factors.size());
    for (Letter b : p.factors) letters.push_back(b.value);
    return json{{"type", p.spec.type.family == Family::A ? "A" : "D"},
                {"rank", p.spec.type.rank},
                {"letters", letters}};
}

Path path_from_json(const json& j) {
    const CartanType t = type_from_json(j);
    std::vector<Letter> factors;
    for (int v : j.at("letters").get<std::vector<int>>()) factors.push_back({v});
    const int length = static_cast<int>(factors.size());
    return make_path({t, length}, std::move(factors));
}

json to_json(const RiggedConfiguration& rc) {
    json nu = json::array();
    for (const Partition& p : rc.config.nu) nu.push_back(to_json(p));
    return json{{"type", rc.config.spec.type.family == Family::A ? "A" : "D"},
                {"rank", rc.config.spec.type.rank},
                {"length", rc.config.spec.length},
                {"nu", nu},
                {"riggings", rc.riggings}};
}

RiggedConfiguration rc_from_json(const json& j) {
    const CartanType t = type_from_json(j);
    const int length = j.at("length").get<int>();
    if (length < 0) throw std::invalid_argument("negative tensor length");
    RiggedConfiguration rc{Configuration{{t, length}, {}}, {}};
    for (const auto& arr : j.at("nu")) rc.config.nu.push_back(partition_from_json(arr));
    rc.riggings = j.at("riggings").get<std::vector<std::vector<int>>>();
    if (rc.config.nu.size() != static_cast<size_t>(t.rank) ||
        rc.riggings.size() != rc.config.nu.size())
        throw std::domain_error("rigged configuration JSON: one partition and one label list per color expected");
    for (size_t a = 0; a < rc.config.nu.size(); ++a)
        if (rc.riggings[a].size() != static_cast<size_t>(rc.config.nu[a].num_parts()))
            throw std::domain_error("rigged configuration JSON: labels misaligned with rows");
    // rows of equal length are interchangeable, so incoming label order
    // within a block is normalized rather than rejected
    canonicalize_riggings(rc);
    validate_rc(rc);
    return rc;
}

}  // namespace xm
