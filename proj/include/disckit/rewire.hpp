#pragma once

#include "path.hpp"

#include <map>

namespace disckit {

// 2k-vertex window around the edge x -> succ(x): k vertices ending at x, then k starting at
// succ(x). `vertices` is p_1..p_2k, `word` the 2k-1 labels along it.
struct Window {
    std::vector<Vertex> vertices;
    std::vector<Symbol> word;
};

inline std::optional<Window> window_at(const ChainGraph& g, Vertex x, std::uint32_t k) {
    if (!g.succ(x)) return std::nullopt;
    std::vector<Vertex> left{x};
    for (std::uint32_t i = 1; i < k; ++i) {
        auto p = g.pred(left.back());
        if (!p) return std::nullopt;
        left.push_back(*p);
    }
    std::reverse(left.begin(), left.end());
    std::vector<Vertex> right{g.succ(x)->to};
    for (std::uint32_t i = 1; i < k; ++i) {
        auto s = g.succ(right.back());
        if (!s) return std::nullopt;
        right.push_back(s->to);
    }
    Window w;
    w.vertices = left;
    w.vertices.insert(w.vertices.end(), right.begin(), right.end());
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) w.word.push_back(g.succ(w.vertices[i])->symbol);
    return w;
}

struct Partition {
    std::vector<char> in_first;  // membership in V1
    std::vector<Vertex> first, second;
};

inline Partition make_partition(std::vector<char> in_first) {
    Partition p{std::move(in_first), {}, {}};
    for (Vertex v = 0; v < p.in_first.size(); ++v) (p.in_first[v] ? p.first : p.second).push_back(v);
    return p;
}

// For each disc class, its ceil(phi * freq) lowest-id vertices go to V1.
inline Partition build_partition(const SGraph& g, std::uint32_t k, const Rational& phi) {
    if (2 * phi >= Rational(g.size())) throw Error("build_partition needs 2*phi < |G|");
    auto fps = disc_fingerprints(g, k);
    std::map<Fingerprint, std::vector<Vertex>> classes;
    for (Vertex v = 0; v < g.size(); ++v) classes[fps[v]].push_back(v);
    std::vector<char> in1(g.size(), 0);
    for (const auto& [fp, members] : classes) {
        auto take = static_cast<std::size_t>(ceil(phi * Rational(members.size(), g.size())));
        for (std::size_t i = 0; i < take && i < members.size(); ++i) in1[members[i]] = 1;
    }
    return make_partition(std::move(in1));
}

inline std::size_t cut(const ChainGraph& g, const std::vector<char>& in1) {
    std::size_t c = 0;
    for (Vertex v = 0; v < g.size(); ++v)
        if (auto s = g.succ(v); s && in1[v] != in1[s->to]) ++c;
    return c;
}

// e_s(P1, P2 | X, Y): edges x -> y with x in X, y in Y whose window reads `word`.
inline std::size_t e_count(const ChainGraph& g, std::uint32_t k, const std::vector<Symbol>& word,
                           const std::vector<char>& in_x, const std::vector<char>& in_y) {
    std::size_t c = 0;
    for (Vertex x = 0; x < g.size(); ++x) {
        auto s = g.succ(x);
        if (!s || !in_x[x] || !in_y[s->to]) continue;
        auto w = window_at(g, x, k);
        if (w && w->word == word) ++c;
    }
    return c;
}

struct RewirePair {
    Vertex p_mid;  // p_k, tail of the V1 -> V2 middle edge
    Vertex q_mid;  // q_k, tail of the V2 -> V1 middle edge
};

// First pair under the scan (p_k ascending, then q_k ascending) satisfying the rewiring
// condition: isomorphic disjoint windows, P crossing V1->V2, Q crossing V2->V1, and
// dist(p_1, q_2k) >= 3, dist(q_1, p_2k) >= 3.
inline std::optional<RewirePair> find_rewire_pair(const ChainGraph& g, const std::vector<char>& in1, std::uint32_t k) {
    std::map<std::vector<Symbol>, std::vector<std::pair<Vertex, Window>>> back;
    for (Vertex x = 0; x < g.size(); ++x) {
        auto s = g.succ(x);
        if (!s || in1[x] || !in1[s->to]) continue;
        if (auto w = window_at(g, x, k)) back[w->word].emplace_back(x, std::move(*w));
    }
    for (Vertex x = 0; x < g.size(); ++x) {
        auto s = g.succ(x);
        if (!s || !in1[x] || in1[s->to]) continue;
        auto pw = window_at(g, x, k);
        if (!pw) continue;
        auto it = back.find(pw->word);
        if (it == back.end()) continue;
        std::set<Vertex> pv(pw->vertices.begin(), pw->vertices.end());
        for (const auto& [y, qw] : it->second) {
            bool disjoint = std::none_of(qw.vertices.begin(), qw.vertices.end(), [&](Vertex v) { return pv.count(v); });
            if (!disjoint) continue;
            if (g.within(pw->vertices.front(), qw.vertices.back(), 3)) continue;
            if (g.within(qw.vertices.front(), pw->vertices.back(), 3)) continue;
            return RewirePair{x, y};
        }
    }
    return std::nullopt;
}

// Replaces p_k -> p_k+1 and q_k -> q_k+1 by p_k -> q_k+1 and q_k -> p_k+1.
inline void rewire(ChainGraph& g, const RewirePair& pr) {
    auto ps = *g.succ(pr.p_mid), qs = *g.succ(pr.q_mid);
    if (ps.symbol != qs.symbol) throw Error("rewire: middle labels differ");
    g.unlink(pr.p_mid);
    g.unlink(pr.q_mid);
    g.link(pr.p_mid, qs.to, ps.symbol);
    g.link(pr.q_mid, ps.to, qs.symbol);
}

struct RewiringReport {
    bool identity = false;  // 2 phi >= |G|: returned unchanged
    Rational phi;
    std::size_t classes = 0;  // C: disc classes of G
    std::size_t v1 = 0, v2 = 0;
    std::size_t cut_before = 0, cut_after = 0, rewires = 0;
    Rational alpha;
    bool v1_in_range = false;       // phi <= |V1| <= phi + C
    bool alpha_within = false;      // alpha <= 2C^2/phi
    Rational cut_bound;             // |S| C^2 (8k+6 + 2(|V1||V2|/|V|) alpha |S|)
    bool cut_bound_holds = false;
};

struct RewiringResult {
    ChainGraph graph;       // G[V1] after rewiring, crossing edges removed
    ChainGraph rewired;     // whole graph after rewiring
    Partition partition;
    RewiringReport report;
};

using RewireObserver = std::function<void(const ChainGraph&, const RewirePair&)>;

inline bool all_cycles_at_least(const ChainGraph& g, std::size_t len) {
    for (const auto& c : g.components())
        if (!c.cycle || c.order.size() < len) return false;
    return true;
}

// Rewires until no pair is left, then keeps V1. Input must be disjoint cycles of length >= 2k+2.
inline RewiringResult edge_rewiring_with_phi(const ChainGraph& g0, std::uint32_t k, const Rational& phi,
                                             const RewireObserver& observe = {}) {
    if (!all_cycles_at_least(g0, 2 * k + 2)) throw Error("edge_rewiring needs disjoint cycles of length >= 2k+2");
    RewiringResult r{g0, g0, {}, {}};
    r.report.phi = phi;
    if (2 * phi >= Rational(g0.size())) {
        r.report.identity = true;
        r.partition = make_partition(std::vector<char>(g0.size(), 1));
        return r;
    }
    auto sg = g0.graph();
    r.partition = build_partition(sg, k, phi);
    const auto& in1 = r.partition.in_first;
    auto& rep = r.report;
    rep.classes = cnt(sg, k).size();
    rep.v1 = r.partition.first.size();
    rep.v2 = r.partition.second.size();
    rep.alpha = alpha(sg, r.partition.first, r.partition.second, k);
    rep.v1_in_range = Rational(rep.v1) >= phi && Rational(rep.v1) <= phi + Rational(rep.classes);
    Rational c2 = Rational(rep.classes * rep.classes);
    rep.alpha_within = rep.alpha <= 2 * c2 / phi;
    rep.cut_before = cut(g0, in1);

    ChainGraph& g = r.rewired;
    while (auto pr = find_rewire_pair(g, in1, k)) {
        rewire(g, *pr);
        ++rep.rewires;
        if (observe) observe(g, *pr);
    }
    rep.cut_after = cut(g, in1);
    Rational s = Rational(g.symbols()->size());
    rep.cut_bound = s * c2 *
                    (Rational(8 * k + 6) +
                     2 * Rational(Integer(rep.v1) * Integer(rep.v2), Integer(g.size())) * rep.alpha * s);
    rep.cut_bound_holds = Rational(rep.cut_after) <= rep.cut_bound;
    r.graph = g.induced(in1);
    return r;
}

// phi = 65 d^k |S|^2 L^5 / eps with d = 2.
inline Rational rewiring_phi(std::uint32_t k, std::size_t symbols, const Integer& L, const Rational& eps) {
    return Rational(65 * ipow(2, k) * Integer(symbols * symbols) * L * L * L * L * L) / eps;
}

inline RewiringResult edge_rewiring(const ChainGraph& g, std::uint32_t k, const Rational& eps, const Integer& L,
                                    const RewireObserver& observe = {}) {
    return edge_rewiring_with_phi(g, k, rewiring_phi(k, g.symbols()->size(), L, eps), observe);
}

}  // namespace disckit
