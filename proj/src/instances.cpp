#include "betasat/instances.hpp"

#include "betasat/errors.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"

namespace betasat {

using json = nlohmann::json;

SetFamily SetFamily::make(std::vector<std::vector<Element>> sets, std::vector<Element> universe) {
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        universe.insert(universe.end(), s.begin(), s.end());
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    return SetFamily{std::move(universe), std::move(sets)};
}

void KPartiteGraph::add_edge(KVertex u, KVertex v) {
    auto check = [&](KVertex w) {
        if (w.cls >= class_sizes.size() || w.index >= class_sizes[w.cls])
            throw InvalidInputError("edge endpoint outside the partition classes");
    };
    check(u);
    check(v);
    if (u.cls == v.cls) throw InvalidInputError("edges must join distinct partition classes");
    if (v < u) std::swap(u, v);
    auto e = std::make_pair(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) edges.insert(it, e);
}

bool KPartiteGraph::adjacent(KVertex u, KVertex v) const {
    if (v < u) std::swap(u, v);
    auto e = std::make_pair(u, v);
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0, e.byte);
    }
}

std::vector<Element> element_list(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of ids", 0);
    std::vector<Element> out;
    for (const auto& e : j) {
        if (!e.is_number_unsigned()) throw ParseError(std::string(what) + " must hold unsigned ids", 0);
        out.push_back(e.get<Element>());
    }
    return out;
}

} // namespace

SetFamily parse_set_family(std::string_view json_text) {
    const json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("sets")) throw ParseError("set family needs a \"sets\" array", 0);
    std::vector<Element> universe;
    if (doc.contains("universe")) universe = element_list(doc["universe"], "\"universe\"");
    if (!doc["sets"].is_array()) throw ParseError("\"sets\" must be an array", 0);
    std::vector<std::vector<Element>> sets;
    for (const auto& s : doc["sets"]) sets.push_back(element_list(s, "each set"));
    return SetFamily::make(std::move(sets), std::move(universe));
}

KPartiteGraph parse_kpartite_graph(std::string_view json_text) {
    const json doc = parse_json(json_text);
    auto count = [&](const char* key) {
        if (!doc.is_object() || !doc.contains(key) || !doc[key].is_number_unsigned())
            throw ParseError(std::string("graph needs an unsigned \"") + key + "\"", 0);
        return doc[key].get<std::size_t>();
    };
    KPartiteGraph g = KPartiteGraph::balanced(count("k"), count("n"));
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array", 0);
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 4 ||
                !std::all_of(e.begin(), e.end(), [](const json& x) { return x.is_number_unsigned(); }))
                throw ParseError("each edge is [classA, indexA, classB, indexB]", 0);
            auto at = [&](std::size_t i) {
                auto v = e[i].get<std::size_t>();
                if (v == 0) throw ParseError("edge classes and indices are 1-based", 0);
                return v - 1;
            };
            g.add_edge(KVertex{at(0), at(1)}, KVertex{at(2), at(3)});
        }
    }
    return g;
}

} // namespace betasat
