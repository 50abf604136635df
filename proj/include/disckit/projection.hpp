#pragma once

#include "enumerate.hpp"

namespace disckit {

// Largest possible k-disc in a graph of max degree d: 1 + d + d(d-1) + ... + d(d-1)^(k-1).
inline std::uint64_t moore_bound(std::uint32_t d, std::uint32_t k) {
    std::uint64_t total = 1, layer = d;
    for (std::uint32_t i = 0; i < k; ++i) {
        total += layer;
        layer *= (d > 0 ? d - 1 : 0);
    }
    return total;
}

inline SymbolTable transform_symbols(const TransformParams& p) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < p.symbols; ++i) names.push_back("s" + std::to_string(i + 1));
    return make_symbols(std::move(names));
}

// A q-disc of the image only sees clusters within q-1 S-steps of a center (q for other
// vertices): out^i vertices sharing an in^i neighbour let one image edge cross one S-arc.
// Those S-discs are graphs themselves, so enumerating up to their Moore bound is exhaustive.
inline std::uint64_t sufficient_cap(const TransformParams& p) { return moore_bound(p.d, p.q - 1); }
inline std::uint64_t sufficient_generalized_cap(const TransformParams& p) { return moore_bound(p.d, p.q); }

struct ProjectionTable {
    TransformParams params;
    std::uint32_t cap = 0;
    std::map<Fingerprint, std::set<Fingerprint>> by_disc;  // S k-disc -> center q-discs
    std::set<Fingerprint> generalized;                      // q-discs of every image vertex
    bool centers_complete = false;
    bool generalized_complete = false;

    std::set<Fingerprint> centers() const {
        std::set<Fingerprint> all;
        for (const auto& [d, s] : by_disc) all.insert(s.begin(), s.end());
        return all;
    }
};

inline ProjectionTable build_projection_table(const TransformParams& p, std::uint32_t cap, bool with_generalized,
                                              Budget budget = Budget::from_env()) {
    ProjectionTable table{p, cap, {}, {}, false, false};
    EnumerationSpec spec{Model::SGraph, p.d, cap, transform_symbols(p), {}, {}};
    auto en = enumerate_graphs(spec, budget);
    DiscIndexer sdisc(p.k), qdisc(p.q);
    for (const auto& g : en.graphs) {
        if (budget.exhausted()) {
            en.complete = false;
            break;
        }
        auto enc = encode(g, p);
        for (Vertex v = 0; v < g.size(); ++v)
            table.by_disc[sdisc(g, v)].insert(qdisc(enc.graph, enc.index.center(v)));
        if (with_generalized)
            for (Vertex x = 0; x < enc.graph.size(); ++x) table.generalized.insert(qdisc(enc.graph, x));
    }
    table.centers_complete = en.complete && cap >= sufficient_cap(p);
    table.generalized_complete = with_generalized && en.complete && cap >= sufficient_generalized_cap(p);
    return table;
}

struct ProjectionSet {
    TransformParams params;
    std::uint32_t cap = 0;
    bool complete = false;
    std::set<Fingerprint> discs;
};

inline ProjectionSet project_set(const Fingerprint& sdisc, const TransformParams& p, std::uint32_t cap,
                                 Budget budget = Budget::from_env()) {
    auto table = build_projection_table(p, cap, false, budget);
    ProjectionSet out{p, cap, table.centers_complete, {}};
    if (auto it = table.by_disc.find(sdisc); it != table.by_disc.end()) out.discs = it->second;
    return out;
}

inline ProjectionSet gen_project_set(const TransformParams& p, std::uint32_t cap, Budget budget = Budget::from_env()) {
    auto table = build_projection_table(p, cap, true, budget);
    return {p, cap, table.generalized_complete, table.generalized};
}

}  // namespace disckit
