#pragma once

#include "path.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace disckit::io {

using Json = nlohmann::json;

inline SymbolTable read_symbols(const Json& j) {
    if (!j.contains("symbols") || j.at("symbols").empty()) return simple_symbols();
    return make_symbols(j.at("symbols").get<std::vector<std::string>>());
}

// {"n", "symbols", "edges": [[u, v, sym|null]], "simple"?}. null means the first symbol.
// With "simple": true every listed edge is set in both directions.
inline SGraph graph_from_json(const Json& j) {
    try {
        auto syms = read_symbols(j);
        std::size_t n = j.at("n").get<std::size_t>();
        bool simple = j.value("simple", false);
        SGraph g(n, syms);
        for (const auto& e : j.value("edges", Json::array())) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3) throw Error("edge must be [u, v, symbol]");
            auto u = e.at(0).get<Vertex>(), v = e.at(1).get<Vertex>();
            if (u >= n || v >= n) throw Error("edge endpoint out of range");
            Symbol s = 0;
            if (e.size() == 3 && !e.at(2).is_null()) s = syms->index(e.at(2).get<std::string>());
            auto check = [&](Vertex a, Vertex b) {
                if (auto old = g.info(a, b); old && *old != s)
                    throw Error("conflicting symbols for pair " + std::to_string(a) + "," + std::to_string(b));
            };
            check(u, v);
            g.set(u, v, s);
            if (simple) {
                if (u == v) throw Error("simple graph has a loop");
                check(v, u);
                g.set(v, u, s);
            }
        }
        if (simple && !is_simple(g)) throw Error("graph flagged simple is not symmetric single-symbol loop-free");
        return g;
    } catch (const Json::exception& ex) {
        throw Error(std::string("bad graph json: ") + ex.what());
    }
}

inline Json graph_to_json(const SGraph& g) {
    Json j;
    j["n"] = g.size();
    j["symbols"] = g.symbols()->names();
    Json edges = Json::array();
    bool simple = is_simple(g) && g.arc_count() > 0;
    for (const auto& a : g.arcs()) {
        if (simple && a.from > a.to) continue;
        edges.push_back(Json::array({a.from, a.to, g.symbols()->name(a.symbol)}));
    }
    j["edges"] = std::move(edges);
    if (simple) j["simple"] = true;
    return j;
}

inline Json disc_to_json(const SGraph& disc_graph, std::uint32_t radius) {
    Json j = graph_to_json(disc_graph);
    j["root"] = 0;
    j["radius"] = radius;
    j["fingerprint"] = fingerprint(disc_graph, Vertex{0}).str();
    return j;
}

struct DiscRecord {
    SGraph graph;  // root is vertex 0
    std::uint32_t radius = 0;
};

// Root may be any vertex in the file; it is moved to position 0.
inline DiscRecord disc_from_json(const Json& j) {
    auto g = graph_from_json(j);
    Vertex root = j.value("root", Vertex{0});
    if (root >= g.size()) throw Error("disc root out of range");
    std::vector<Vertex> order{root};
    for (Vertex v = 0; v < g.size(); ++v)
        if (v != root) order.push_back(v);
    auto moved = g.induced(order);
    std::uint32_t radius = j.value("radius", 0u);
    if (j.contains("radius") && !is_disc_of_radius(moved, radius))
        throw Error("disc has vertices farther than its radius");
    if (j.contains("fingerprint") && j.at("fingerprint").get<std::string>() != fingerprint(moved, Vertex{0}).str())
        throw Error("disc fingerprint does not match its graph");
    return {std::move(moved), radius};
}

inline std::vector<DiscRecord> disc_set_from_json(const Json& j) {
    const Json& list = j.is_object() ? j.at("discs") : j;
    std::vector<DiscRecord> out;
    for (const auto& d : list) out.push_back(disc_from_json(d));
    return out;
}

template <class Key>
Json vector_to_json(const std::map<Key, Rational>& v) {
    Json j = Json::object();
    for (const auto& [k, r] : v) {
        if constexpr (std::is_same_v<Key, Fingerprint>) j[k.str()] = to_string(r);
        else j[k] = to_string(r);
    }
    return j;
}

inline FreqVector freq_from_json(const Json& j) {
    FreqVector f;
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto r = parse_rational(it.value().get<std::string>());
        if (r != 0) f[Fingerprint(it.key())] = r;
    }
    return f;
}

// {"symbols": [...], "edges": ["a", "b", ...]}; n = edges + 1.
inline SPath path_from_json(const Json& j) {
    try {
        auto syms = read_symbols(j);
        SPath p{syms, {}};
        for (const auto& e : j.at("edges")) p.edges.push_back(syms->index(e.get<std::string>()));
        return p;
    } catch (const Json::exception& ex) {
        throw Error(std::string("bad path json: ") + ex.what());
    }
}

inline Json path_to_json(const SPath& p) {
    Json edges = Json::array();
    for (auto s : p.edges) edges.push_back(p.symbols->name(s));
    return Json{{"symbols", p.symbols->names()}, {"edges", std::move(edges)}};
}

inline Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& ex) {
        throw Error(path + ": " + ex.what());
    }
}

inline void write_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace disckit::io
