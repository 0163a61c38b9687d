#include "qlie/bialgebra_io.hpp"

#include <set>

#include "json_support.hpp"

namespace qlie {

Scalar scalar_from_json(const ordered_json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
    throw ParseError("scalar values must be strings like \"1/2*r2\" or integers");
}

namespace {

std::pair<int, int> parse_pair_key(const LieBialgebra& b, const std::string& key) {
    const std::size_t comma = key.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == key.size()) {
        throw ParseError("pair key must look like \"A,B\": '" + key + "'");
    }
    const int p = b.index_of(key.substr(0, comma));
    const int q = b.index_of(key.substr(comma + 1));
    if (p == q) throw ParseError("pair key repeats a generator: '" + key + "'");
    return {p, q};
}

} // namespace

LieBialgebra bialgebra_from_json(const ordered_json& j) {
    if (!j.is_object()) throw ParseError("bialgebra description must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key != "name" && key != "generators" && key != "brackets" && key != "cocommutators") {
            throw ParseError("unknown key in bialgebra description: '" + key + "'");
        }
    }
    if (!j.contains("generators") || !j["generators"].is_array()) {
        throw ParseError("bialgebra description needs a \"generators\" array");
    }
    std::vector<std::string> names;
    for (const auto& g : j["generators"]) {
        if (!g.is_string()) throw ParseError("generator names must be strings");
        const std::string name = g.get<std::string>();
        if (name.find(',') != std::string::npos) {
            throw ParseError("generator names must not contain commas: '" + name + "'");
        }
        names.push_back(name);
    }
    LieBialgebra b(std::move(names));

    if (j.contains("brackets")) {
        if (!j["brackets"].is_object()) throw ParseError("\"brackets\" must be an object");
        std::set<PairKey> seen;
        for (const auto& [key, row] : j["brackets"].items()) {
            const auto [p, q] = parse_pair_key(b, key);
            const PairKey canon = p < q ? PairKey{p, q} : PairKey{q, p};
            if (!seen.insert(canon).second) {
                throw DuplicateEntryError("bracket pair listed twice: '" + key + "'");
            }
            if (!row.is_object()) throw ParseError("bracket entry must map generators to scalars");
            for (const auto& [target, value] : row.items()) {
                b.set_bracket(p, q, b.index_of(target), scalar_from_json(value));
            }
        }
    }

    if (j.contains("cocommutators")) {
        if (!j["cocommutators"].is_object()) throw ParseError("\"cocommutators\" must be an object");
        for (const auto& [gen, row] : j["cocommutators"].items()) {
            const int r = b.index_of(gen);
            if (!row.is_object()) throw ParseError("cocommutator entry must map pairs to scalars");
            std::set<PairKey> seen;
            for (const auto& [key, value] : row.items()) {
                const auto [p, q] = parse_pair_key(b, key);
                const PairKey canon = p < q ? PairKey{p, q} : PairKey{q, p};
                if (!seen.insert(canon).second) {
                    throw DuplicateEntryError("cocommutator pair listed twice for '" + gen +
                                              "': '" + key + "'");
                }
                // "A,B": v encodes v (B (x) A - A (x) B), i.e. -v on the
                // wedge A (x) B - B (x) A.
                b.set_cocommutator(r, p, q, -scalar_from_json(value));
            }
        }
    }
    return b;
}

ordered_json bialgebra_to_json(const LieBialgebra& b) {
    ordered_json j;
    j["generators"] = ordered_json::array();
    for (const auto& name : b.generators()) j["generators"].push_back(name);

    ordered_json brackets = ordered_json::object();
    for (const auto& [pq, row] : b.bracket_table()) {
        const std::string key = b.generator_name(pq.first) + "," + b.generator_name(pq.second);
        ordered_json entry = ordered_json::object();
        for (const auto& [r, f] : row) entry[b.generator_name(r)] = f.render();
        brackets[key] = std::move(entry);
    }
    j["brackets"] = std::move(brackets);

    ordered_json cocoms = ordered_json::object();
    for (const auto& [r, row] : b.cocom_table()) {
        ordered_json entry = ordered_json::object();
        for (const auto& [pq, w] : row) {
            const std::string key = b.generator_name(pq.first) + "," + b.generator_name(pq.second);
            entry[key] = (-w).render();
        }
        cocoms[b.generator_name(r)] = std::move(entry);
    }
    j["cocommutators"] = std::move(cocoms);
    return j;
}

LieBialgebra parse_bialgebra_text(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return bialgebra_from_json(j);
}

std::string bialgebra_to_json_text(const LieBialgebra& b, int indent) {
    return bialgebra_to_json(b).dump(indent);
}

} // namespace qlie
