#pragma once

#include "budget.hpp"
#include "transform.hpp"

#include <set>
#include <unordered_set>

namespace disckit {

enum class Model { Simple, SGraph, Restricted };

struct EnumerationSpec {
    Model model = Model::Simple;
    std::uint32_t d = 2;
    std::uint32_t n_max = 0;
    SymbolTable symbols = simple_symbols();
    std::set<PairValue> pairs;                 // Restricted only
    std::set<std::optional<Symbol>> loops;     // Restricted only

    bool allows_pair(std::optional<Symbol> uv, std::optional<Symbol> vu) const {
        if (!uv && !vu) return true;
        switch (model) {
            case Model::Simple: return uv == std::optional<Symbol>(0) && vu == std::optional<Symbol>(0);
            case Model::SGraph: return true;
            case Model::Restricted: return pairs.count({uv, vu}) > 0;
        }
        return false;
    }
    bool allows_loop(std::optional<Symbol> s) const {
        if (!s) return true;
        switch (model) {
            case Model::Simple: return false;
            case Model::SGraph: return true;
            case Model::Restricted: return loops.count(s) > 0;
        }
        return false;
    }
    bool admits(const SGraph& g) const {
        if (g.max_degree() > d) return false;
        for (Vertex u = 0; u < g.size(); ++u) {
            if (!allows_loop(g.loop(u))) return false;
            for (Vertex v : g.neighbors(u))
                if (!allows_pair(g.info(u, v), g.info(v, u))) return false;
        }
        return true;
    }
};

struct Enumeration {
    std::vector<SGraph> graphs;  // one per isomorphism class, by size then fingerprint
    bool complete = true;
    std::uint32_t reached_n = 0;  // largest size fully enumerated
};

namespace detail {

inline std::vector<std::optional<Symbol>> symbol_options(std::size_t count) {
    std::vector<std::optional<Symbol>> out{std::nullopt};
    for (std::size_t s = 0; s < count; ++s) out.push_back(static_cast<Symbol>(s));
    return out;
}

}  // namespace detail

// Classes of size 1..n_max, grown one vertex at a time from the previous level and
// deduplicated by unrooted canonical form. Every model here is closed under vertex deletion,
// so each class is reached.
inline Enumeration enumerate_graphs(const EnumerationSpec& spec, Budget budget = Budget::from_env()) {
    Enumeration out;
    auto opts = detail::symbol_options(spec.symbols->size());
    std::vector<PairValue> pair_opts;
    for (auto a : opts)
        for (auto b : opts)
            if ((a || b) && spec.allows_pair(a, b)) pair_opts.push_back({a, b});
    std::vector<std::optional<Symbol>> loop_opts;
    for (auto s : opts)
        if (spec.allows_loop(s)) loop_opts.push_back(s);

    std::vector<SGraph> level{SGraph(0, spec.symbols)};
    for (std::uint32_t n = 1; n <= spec.n_max; ++n) {
        std::map<Fingerprint, SGraph> next;
        bool aborted = false;
        for (const auto& parent : level) {
            for (auto loop : loop_opts) {
                SGraph g = parent;
                Vertex nv = g.add_vertex();
                if (loop) g.set(nv, nv, *loop);
                if (g.degree(nv) > spec.d) continue;
                std::function<void(Vertex)> extend = [&](Vertex u) {
                    if (aborted) return;
                    if (u == nv) {
                        if (!budget.tick()) {
                            aborted = true;
                            return;
                        }
                        auto fp = fingerprint(g);
                        if (!next.count(fp)) next.emplace(std::move(fp), g);
                        return;
                    }
                    extend(u + 1);
                    for (const auto& [a, b] : pair_opts) {
                        g.set(nv, u, a);
                        g.set(u, nv, b);
                        if (g.degree(nv) <= spec.d && g.degree(u) <= spec.d) extend(u + 1);
                        g.set(nv, u, std::nullopt);
                        g.set(u, nv, std::nullopt);
                    }
                };
                extend(0);
            }
            if (aborted) break;
        }
        if (aborted) {
            out.complete = false;
            return out;
        }
        level.clear();
        for (auto& [fp, g] : next) {
            level.push_back(g);
            out.graphs.push_back(std::move(g));
        }
        out.reached_n = n;
    }
    return out;
}

}  // namespace disckit
