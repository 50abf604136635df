#pragma once

#include "freq.hpp"

#include <array>
#include <map>
#include <set>

namespace disckit {

struct TransformParams {
    std::uint32_t d = 0;        // degree bound of the S-graph
    std::uint32_t k = 0;        // disc radius on the S-graph side
    std::uint32_t symbols = 0;  // |S|
    std::uint32_t t = 0;
    std::uint32_t q = 0;  // disc radius on the simple-graph side

    static TransformParams make(std::uint32_t d, std::uint32_t k, std::uint32_t symbols) {
        if (d < 2) throw Error("transform needs d >= 2");
        if (k < 1) throw Error("transform needs k >= 1");
        if (symbols < 1) throw Error("transform needs a nonempty information set");
        TransformParams p{d, k, symbols, 0, 3 * k + 1};
        p.t = std::max((d + 1) / 2 + 3, symbols + 1);
        return p;
    }

    std::uint32_t cluster_size() const { return 2 * t + 2; }
    std::uint32_t image_degree() const { return 2 * t + 1; }
};

// eps / (4 (2t+2)^2 (1 + 2(2t+1)^q))
inline Rational epsilon1(const TransformParams& p, const Rational& eps) {
    if (eps <= 0 || eps >= 1) throw Error("epsilon must lie in (0,1)");
    Integer c = p.cluster_size();
    Integer denom = 4 * c * c * (1 + 2 * ipow(p.image_degree(), p.q));
    return eps / Rational(denom);
}

// Vertex layout of the encoded graph. Ring positions are 1..2t: position i <= t is in^i,
// position t+i is out^i.
struct ClusterIndex {
    std::uint32_t t = 0;

    Vertex base(Vertex v) const { return v * (2 * t + 2); }
    Vertex ring(Vertex v, std::uint32_t pos) const { return base(v) + pos - 1; }
    Vertex in(Vertex v, std::uint32_t i) const { return ring(v, i); }
    Vertex out(Vertex v, std::uint32_t i) const { return ring(v, t + i); }
    Vertex center(Vertex v) const { return base(v) + 2 * t; }
    Vertex marker(Vertex v) const { return base(v) + 2 * t + 1; }
    Vertex owner(Vertex x) const { return x / (2 * t + 2); }
};

inline void add_cluster_pattern(SGraph& h, Vertex c, Vertex m, const std::vector<Vertex>& ring) {
    std::size_t len = ring.size();
    for (std::size_t i = 0; i < len; ++i) h.connect_both(c, ring[i]);
    for (std::size_t i = 0; i + 1 < len; ++i) h.connect_both(m, ring[i]);
    for (std::size_t i = 0; i + 1 < len; ++i) h.connect_both(ring[i], ring[i + 1]);
    h.connect_both(c, m);
}

struct Encoded {
    SGraph graph;
    ClusterIndex index;
};

inline Encoded encode(const SGraph& g, const TransformParams& p) {
    if (g.symbol_count() != p.symbols) throw Error("encode: |S| does not match parameters");
    if (g.max_degree() > p.d) throw Error("encode: input exceeds degree bound");
    ClusterIndex ix{p.t};
    SGraph h(g.size() * p.cluster_size());
    for (Vertex v = 0; v < g.size(); ++v) {
        std::vector<Vertex> ring;
        for (std::uint32_t i = 1; i <= 2 * p.t; ++i) ring.push_back(ix.ring(v, i));
        add_cluster_pattern(h, ix.center(v), ix.marker(v), ring);
    }
    for (const auto& a : g.arcs()) h.connect_both(ix.out(a.from, a.symbol + 1u), ix.in(a.to, a.symbol + 1u));
    return {std::move(h), ix};
}

// One cluster read off a simple graph.
struct ClusterView {
    Vertex center = 0;
    Vertex marker = 0;
    std::vector<Vertex> ring;  // ring[i-1] = position i
};

namespace detail {

// All readings of the cluster around `c` that match the pattern exactly, allowing a single
// loop chord (in^j, out^j) with j <= |S|. At most two readings exist.
inline std::vector<ClusterView> read_cluster(const SGraph& g, Vertex c, const TransformParams& p) {
    const std::uint32_t t = p.t, len = 2 * t;
    auto members = g.neighbors(c);
    if (members.size() != len + 1) return {};
    std::set<Vertex> mset(members.begin(), members.end());
    auto inside = [&](Vertex x) {
        std::vector<Vertex> out;
        for (Vertex y : g.neighbors(x))
            if (mset.count(y)) out.push_back(y);
        return out;
    };
    std::optional<Vertex> marker;
    for (Vertex x : members)
        if (inside(x).size() == len - 1) {
            if (marker) return {};
            marker = x;
        }
    if (!marker || g.degree(*marker) != len) return {};
    auto madj = inside(*marker);
    std::set<Vertex> madj_set(madj.begin(), madj.end());
    std::optional<Vertex> last;
    std::vector<Vertex> ringv;
    for (Vertex x : members) {
        if (x == *marker) continue;
        ringv.push_back(x);
        if (!madj_set.count(x)) {
            if (last) return {};
            last = x;
        }
    }
    if (!last) return {};

    std::vector<ClusterView> found;
    std::vector<Vertex> path{*last};
    std::set<Vertex> used{*last};
    std::function<void()> dfs = [&]() {
        if (path.size() == len) {
            ClusterView view{c, *marker, std::vector<Vertex>(path.rbegin(), path.rend())};
            std::map<Vertex, std::uint32_t> pos;
            for (std::uint32_t i = 0; i < len; ++i) pos[view.ring[i]] = i + 1;
            std::size_t chords = 0;
            for (Vertex x : view.ring)
                for (Vertex y : inside(x)) {
                    if (y == *marker || pos[x] > pos[y]) continue;
                    auto a = pos[x], b = pos[y];
                    if (b == a + 1) continue;
                    if (b == a + t && a <= p.symbols) ++chords;
                    else return;
                }
            if (chords <= 1) found.push_back(std::move(view));
            return;
        }
        for (Vertex y : inside(path.back())) {
            if (y == *marker || used.count(y)) continue;
            path.push_back(y);
            used.insert(y);
            dfs();
            used.erase(y);
            path.pop_back();
        }
    };
    dfs();
    return found;
}

}  // namespace detail

// Result of reading an encoded neighbourhood back into an S-graph.
struct Decoded {
    SGraph sgraph;                       // vertex i <-> clusters[i]
    std::vector<ClusterView> clusters;   // in discovery order; clusters[0] is the root's
};

namespace detail {

struct DecodeState {
    const SGraph& g;
    const TransformParams& p;
    std::vector<ClusterView> clusters;
    std::vector<std::uint32_t> depth;
    std::map<Vertex, std::pair<std::uint32_t, std::uint32_t>> role;  // vertex -> (cluster, pos); pos 0 center, 2t+1 marker

    std::optional<std::uint32_t> pos_of(Vertex x, std::uint32_t cl) const {
        auto it = role.find(x);
        if (it == role.end() || it->second.first != cl) return std::nullopt;
        return it->second.second;
    }

    bool claim(const ClusterView& v, std::uint32_t depth_value) {
        std::uint32_t id = static_cast<std::uint32_t>(clusters.size());
        if (role.count(v.center) || role.count(v.marker)) return false;
        for (Vertex x : v.ring)
            if (role.count(x)) return false;
        role[v.center] = {id, 0};
        role[v.marker] = {id, 2 * p.t + 1};
        for (std::uint32_t i = 0; i < v.ring.size(); ++i) role[v.ring[i]] = {id, i + 1};
        clusters.push_back(v);
        depth.push_back(depth_value);
        return true;
    }

    // Picks the reading whose in-side inter-cluster edges meet out-vertices of equal index.
    std::optional<ClusterView> choose(Vertex center) const {
        auto views = read_cluster(g, center, p);
        if (views.empty()) return std::nullopt;
        if (views.size() == 1) return views[0];
        for (const auto& view : views) {
            bool ok = true;
            std::set<Vertex> own(view.ring.begin(), view.ring.end());
            for (std::uint32_t i = 1; i <= p.t && ok; ++i)
                for (Vertex y : g.neighbors(view.ring[i - 1])) {
                    if (y == view.center || y == view.marker || own.count(y)) continue;
                    auto other = owning_center(y);
                    if (!other) continue;
                    auto ov = read_cluster(g, *other, p);
                    if (ov.empty()) continue;
                    auto& ring = ov[0].ring;
                    auto it = std::find(ring.begin(), ring.end(), y);
                    if (it == ring.end() || static_cast<std::uint32_t>(it - ring.begin()) + 1 != p.t + i) ok = false;
                }
            if (ok) return view;
        }
        return views[0];
    }

    // The unique neighbour of ring vertex y that reads as a cluster containing y.
    std::optional<Vertex> owning_center(Vertex y) const {
        std::optional<Vertex> found;
        for (Vertex c : g.neighbors(y)) {
            if (g.neighbors(c).size() != p.image_degree()) continue;
            auto views = read_cluster(g, c, p);
            if (views.empty()) continue;
            auto& ring = views[0].ring;
            if (std::find(ring.begin(), ring.end(), y) == ring.end()) continue;
            if (found) return std::nullopt;
            found = c;
        }
        return found;
    }
};

}  // namespace detail

// Reads the clusters reachable from `root_center` within `rounds` hops and the S-graph they
// induce. The claimed vertices must form exactly the encoding of the result, and any other
// vertex may touch them only at ring vertices of the outermost clusters (partial clusters
// farther out). On a q-disc rooted at a center this recovers the k-disc of the vertex.
inline std::optional<Decoded> decode_neighbourhood(const SGraph& g, Vertex root_center, const TransformParams& p,
                                                   std::uint32_t rounds) {
    detail::DecodeState st{g, p, {}, {}, {}};
    auto first = st.choose(root_center);
    if (!first || !st.claim(*first, 0)) return std::nullopt;
    for (std::size_t head = 0; head < st.clusters.size(); ++head) {
        if (st.depth[head] >= rounds) continue;
        auto view = st.clusters[head];
        for (Vertex x : view.ring)
            for (Vertex y : g.neighbors(x)) {
                if (st.role.count(y)) continue;
                auto c = st.owning_center(y);
                if (!c) return std::nullopt;
                auto next = st.choose(*c);
                if (!next || !st.claim(*next, st.depth[head] + 1)) return std::nullopt;
            }
    }

    const std::uint32_t n = static_cast<std::uint32_t>(st.clusters.size());
    SGraph s(n, make_symbols([&] {
                 std::vector<std::string> names;
                 for (std::uint32_t i = 0; i < p.symbols; ++i) names.push_back("s" + std::to_string(i + 1));
                 return names;
             }()));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t j = 1; j <= p.t; ++j) {
            Vertex from = st.clusters[a].ring[p.t + j - 1];
            for (Vertex y : g.neighbors(from)) {
                auto it = st.role.find(y);
                if (it == st.role.end()) continue;
                auto [b, pos] = it->second;
                if (pos != j) continue;
                if (j > p.symbols) return std::nullopt;
                if (s.info(a, b)) return std::nullopt;
                s.set(a, b, static_cast<Symbol>(j - 1));
            }
        }
    if (s.max_degree() > p.d) return std::nullopt;

    auto enc = encode(s, p);
    std::map<Vertex, Vertex> to_enc;
    for (const auto& [x, r] : st.role) {
        auto [cl, pos] = r;
        to_enc[x] = pos == 0                ? enc.index.center(cl)
                    : pos == 2 * p.t + 1 ? enc.index.marker(cl)
                                         : enc.index.ring(cl, pos);
    }
    std::size_t arcs = 0;
    for (const auto& [x, ex] : to_enc) {
        auto [cl, pos] = st.role.at(x);
        bool open_ring = st.depth[cl] >= rounds && pos >= 1 && pos <= 2 * p.t;
        for (Vertex y : g.neighbors(x)) {
            auto it = to_enc.find(y);
            if (it == to_enc.end()) {
                if (!open_ring) return std::nullopt;
                continue;
            }
            if (!enc.graph.info(ex, it->second)) return std::nullopt;
            ++arcs;
        }
    }
    if (arcs != enc.graph.arc_count()) return std::nullopt;
    return Decoded{std::move(s), std::move(st.clusters)};
}

// Inverse of the encoder on a q-disc rooted at a cluster center; returns the k-disc of the
// original vertex (root is vertex 0), or nullopt if the disc is not a center projection.
inline std::optional<SGraph> reconstruct_disc(const SGraph& qdisc, const TransformParams& p) {
    if (qdisc.size() == 0 || !is_simple(qdisc)) return std::nullopt;
    auto d = decode_neighbourhood(qdisc, 0, p, p.k);
    if (!d) return std::nullopt;
    return std::move(d->sgraph);
}

inline bool center_decodable(const SGraph& g, Vertex v, const TransformParams& p) {
    if (g.neighbors(v).size() != p.image_degree()) return false;
    auto qd = disc(g, v, p.q);
    return decode_neighbourhood(qd.graph, 0, p, p.k).has_value();
}

struct PsiResult {
    SGraph graph;                  // induced on the union of decodable clusters
    std::vector<Vertex> kept;      // graph vertex i = input vertex kept[i]
    std::vector<Vertex> centers;   // decodable centers of the input
    SGraph preimage;               // S-graph whose encoding is `graph`, up to relabelling
};

inline PsiResult psi(const SGraph& g, const TransformParams& p) {
    if (!is_simple(g)) throw Error("psi expects a simple graph");
    if (g.max_degree() > p.image_degree()) throw Error("psi: input exceeds degree 2t+1");
    PsiResult r{SGraph(0), {}, {}, SGraph(0)};
    std::vector<char> taken(g.size(), 0);
    std::vector<ClusterView> views;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (g.neighbors(v).size() != p.image_degree()) continue;
        auto qd = disc(g, v, p.q);
        auto dec = decode_neighbourhood(qd.graph, 0, p, p.k);
        if (!dec) continue;
        ClusterView view = dec->clusters[0];
        view.center = qd.source[view.center];
        view.marker = qd.source[view.marker];
        for (auto& x : view.ring) x = qd.source[x];
        std::vector<Vertex> members{view.center, view.marker};
        members.insert(members.end(), view.ring.begin(), view.ring.end());
        for (Vertex x : members) {
            if (taken[x]) throw Error("psi: overlapping clusters (decoder invariant broken)");
            taken[x] = 1;
        }
        r.centers.push_back(v);
        views.push_back(std::move(view));
    }
    for (const auto& view : views) {
        r.kept.push_back(view.center);
        r.kept.push_back(view.marker);
        r.kept.insert(r.kept.end(), view.ring.begin(), view.ring.end());
    }
    r.graph = g.induced(r.kept);
    // Local indices inside r.graph follow the layout (center, marker, ring...).
    const std::uint32_t cs = p.cluster_size();
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < p.symbols; ++i) names.push_back("s" + std::to_string(i + 1));
    SGraph pre(views.size(), make_symbols(names));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> role(r.kept.size());
    for (std::uint32_t c = 0; c < views.size(); ++c)
        for (std::uint32_t i = 0; i < cs; ++i) role[c * cs + i] = {c, i < 2 ? 0 : i - 1};
    for (std::uint32_t c = 0; c < views.size(); ++c)
        for (std::uint32_t j = 1; j <= p.symbols; ++j) {
            Vertex from = c * cs + 2 + (p.t + j - 1);
            for (Vertex y : r.graph.neighbors(from)) {
                auto [b, pos] = role[y];
                if (pos == j && y % cs >= 2) pre.set(c, b, static_cast<Symbol>(j - 1));
            }
        }
    r.preimage = std::move(pre);
    return r;
}

// Pairs (I(u,v), I(v,u)) allowed by the model; nullopt stands for "absent".
using PairValue = std::pair<std::optional<Symbol>, std::optional<Symbol>>;

// Zeroes every pair outside `pairs` symmetrically and every loop outside `loops`.
inline SGraph naturalize_edges(const SGraph& g, const std::set<PairValue>& pairs,
                               const std::set<std::optional<Symbol>>& loops) {
    SGraph h = g;
    for (Vertex u = 0; u < g.size(); ++u) {
        if (!loops.count(g.loop(u))) h.set(u, u, std::nullopt);
        for (Vertex v : g.neighbors(u)) {
            if (v < u) continue;
            if (!pairs.count({g.info(u, v), g.info(v, u)})) {
                h.set(u, v, std::nullopt);
                h.set(v, u, std::nullopt);
            }
        }
    }
    return h;
}

}  // namespace disckit
