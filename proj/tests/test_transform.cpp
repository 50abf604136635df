#include "brute.hpp"

#include <disckit/projection.hpp>

#include <gtest/gtest.h>

using namespace disckit;

namespace {

std::vector<std::uint32_t> bfs(const SGraph& g, Vertex s) { return g.distances(s); }

SymbolTable syms(std::uint32_t n) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    return make_symbols(names);
}

}  // namespace

TEST(Params, Derived) {
    auto p = TransformParams::make(2, 1, 1);
    EXPECT_EQ(p.t, 4u);
    EXPECT_EQ(p.q, 4u);
    EXPECT_EQ(TransformParams::make(3, 2, 3).t, 5u);
    EXPECT_EQ(TransformParams::make(3, 2, 3).q, 7u);
    EXPECT_EQ(TransformParams::make(2, 1, 6).t, 7u);
    EXPECT_EQ(TransformParams::make(5, 1, 1).t, 6u);
    EXPECT_THROW(TransformParams::make(1, 1, 1), Error);
    // 1/2 / (4 * 10^2 * (1 + 2 * 9^4))
    EXPECT_EQ(epsilon1(p, make_rational(1, 2)), make_rational(1, 10498400));
}

TEST(Encode, SizeDegreesAndDistanceThree) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t d = 2 + trial % 2, s = 1 + trial % 3;
        auto p = TransformParams::make(d, 1, s);
        auto g = brute::random_sgraph(rng, 1 + rng() % 8, d, syms(s));
        auto enc = encode(g, p);
        ASSERT_EQ(enc.graph.size(), g.size() * p.cluster_size());
        ASSERT_TRUE(is_simple(enc.graph));
        for (Vertex v = 0; v < g.size(); ++v) {
            EXPECT_EQ(enc.graph.degree(enc.index.center(v)), 2 * p.t + 1);
            EXPECT_EQ(enc.graph.degree(enc.index.marker(v)), 2 * p.t);
            for (std::uint32_t i = 1; i <= 2 * p.t; ++i) EXPECT_LT(enc.graph.degree(enc.index.ring(v, i)), 2 * p.t);
            auto dist = bfs(enc.graph, enc.index.center(v));
            for (Vertex w = 0; w < g.size(); ++w) {
                if (w == v) continue;
                bool adj = g.info(v, w) || g.info(w, v);
                auto dd = dist[enc.index.center(w)];
                if (adj) EXPECT_EQ(dd, 3u);
                else EXPECT_GT(dd, 3u);
            }
        }
    }
}

TEST(Encode, RejectsDegreeOverflow) {
    SGraph g(4, syms(1));
    g.set(0, 1, 0);
    g.set(0, 2, 0);
    g.set(0, 3, 0);
    EXPECT_THROW(encode(g, TransformParams::make(2, 1, 1)), Error);
}

TEST(Reconstruct, RoundTripOnRandomGraphs) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 80; ++trial) {
        std::uint32_t d = 2 + trial % 2, s = 1 + trial % 3, k = 1 + (trial % 5 == 0);
        auto p = TransformParams::make(d, k, s);
        auto g = brute::random_sgraph(rng, 1 + rng() % 7, d, syms(s), 0.2);
        auto enc = encode(g, p);
        for (Vertex v = 0; v < g.size(); ++v) {
            auto qd = disc(enc.graph, enc.index.center(v), p.q);
            auto back = reconstruct_disc(qd.graph, p);
            ASSERT_TRUE(back.has_value()) << "trial " << trial << " v " << v;
            ASSERT_EQ(fingerprint(*back, Vertex{0}), disc(g, v, k).fingerprint());
        }
        for (Vertex x = 0; x < enc.graph.size(); ++x) {
            bool is_center = x % p.cluster_size() == 2 * p.t;
            EXPECT_EQ(center_decodable(enc.graph, x, p), is_center);
        }
    }
}

TEST(Reconstruct, LoopClusterWithReversibleInSide) {
    auto p = TransformParams::make(2, 1, 1);
    SGraph g(1, syms(1));
    g.set(0, 0, 0);
    auto enc = encode(g, p);
    auto back = reconstruct_disc(disc(enc.graph, enc.index.center(0), p.q).graph, p);
    ASSERT_TRUE(back);
    EXPECT_EQ(back->loop(0), std::optional<Symbol>(0));
}

TEST(Reconstruct, RejectsPerturbedImages) {
    auto p = TransformParams::make(2, 1, 1);
    SGraph g(2, syms(1));
    g.set(0, 1, 0);
    auto enc = encode(g, p);
    auto h = enc.graph;
    // An extra edge between two in-vertices cannot occur in an image.
    h.connect_both(enc.index.in(0, 2), enc.index.in(1, 3));
    EXPECT_FALSE(reconstruct_disc(disc(h, enc.index.center(0), p.q).graph, p));
    EXPECT_FALSE(reconstruct_disc(SGraph(1), p));
}

TEST(Psi, FixesImagesAndRecoversPreimage) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = TransformParams::make(2, 1, 2);
        auto g = brute::random_sgraph(rng, 1 + rng() % 6, 2, syms(2));
        auto enc = encode(g, p);
        auto r = psi(enc.graph, p);
        EXPECT_EQ(r.graph.size(), enc.graph.size());
        EXPECT_EQ(r.centers.size(), g.size());
        EXPECT_EQ(fingerprint(r.preimage), fingerprint(g));
    }
}

TEST(Psi, PerturbedGraphsYieldImages) {
    std::mt19937_64 rng(24);
    auto p = TransformParams::make(2, 1, 1);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = brute::random_sgraph(rng, 2 + rng() % 5, 2, syms(1));
        auto h = encode(g, p).graph;
        for (int e = 0; e < 3; ++e) {
            Vertex a = rng() % h.size(), b = rng() % h.size();
            if (a == b) continue;
            if (h.info(a, b)) {
                h.set(a, b, std::nullopt);
                h.set(b, a, std::nullopt);
            } else {
                h.connect_both(a, b);
                if (h.degree(a) > p.image_degree() || h.degree(b) > p.image_degree()) {
                    h.set(a, b, std::nullopt);
                    h.set(b, a, std::nullopt);
                }
            }
        }
        auto r = psi(h, p);
        EXPECT_EQ(r.graph.size(), r.centers.size() * p.cluster_size());
        EXPECT_EQ(fingerprint(encode(r.preimage, p).graph), fingerprint(r.graph));
    }
}

TEST(Naturalize, DropsDisallowedPairs) {
    auto s = syms(2);
    SGraph g(3, s);
    g.set(0, 1, 0);
    g.set(1, 0, 1);
    g.set(1, 2, 0);
    g.set(2, 2, 1);
    std::set<PairValue> pairs{{Symbol{0}, std::nullopt}, {std::nullopt, Symbol{0}}};
    std::set<std::optional<Symbol>> loops{std::nullopt};
    auto h = naturalize_edges(g, pairs, loops);
    EXPECT_FALSE(h.info(0, 1));
    EXPECT_FALSE(h.info(1, 0));
    EXPECT_EQ(h.info(1, 2), std::optional<Symbol>(0));
    EXPECT_FALSE(h.loop(2));
}

TEST(Enumerate, SimpleSmallCounts) {
    EnumerationSpec spec{Model::Simple, 2, 3};
    auto en = enumerate_graphs(spec);
    EXPECT_TRUE(en.complete);
    EXPECT_EQ(en.graphs.size(), 7u);
    EXPECT_TRUE(enumerate_graphs(EnumerationSpec{Model::Simple, 2, 0}).graphs.empty());
}

namespace {

std::size_t brute_class_count(const EnumerationSpec& spec) {
    std::size_t total = 0;
    auto opts = std::vector<std::optional<Symbol>>{std::nullopt};
    for (Symbol s = 0; s < spec.symbols->size(); ++s) opts.push_back(s);
    for (std::uint32_t n = 1; n <= spec.n_max; ++n) {
        std::vector<std::pair<Vertex, Vertex>> cells;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) cells.push_back({u, v});
        std::vector<SGraph> reps;
        std::vector<std::size_t> digit(cells.size(), 0);
        while (true) {
            SGraph g(n, spec.symbols);
            for (std::size_t i = 0; i < cells.size(); ++i)
                if (opts[digit[i]]) g.set(cells[i].first, cells[i].second, *opts[digit[i]]);
            if (spec.admits(g)) {
                bool seen = false;
                for (const auto& r : reps)
                    if (brute::isomorphic(r, g, false)) {
                        seen = true;
                        break;
                    }
                if (!seen) reps.push_back(g);
            }
            std::size_t i = 0;
            while (i < digit.size() && ++digit[i] == opts.size()) digit[i++] = 0;
            if (i == digit.size()) break;
        }
        total += reps.size();
    }
    return total;
}

}  // namespace

TEST(Enumerate, MatchesLabelledQuotient) {
    EnumerationSpec simple{Model::Simple, 3, 4};
    EXPECT_EQ(enumerate_graphs(simple).graphs.size(), brute_class_count(simple));
    EnumerationSpec sg{Model::SGraph, 2, 3, syms(1)};
    EXPECT_EQ(enumerate_graphs(sg).graphs.size(), brute_class_count(sg));
    EnumerationSpec two{Model::SGraph, 2, 2, syms(2)};
    EXPECT_EQ(enumerate_graphs(two).graphs.size(), brute_class_count(two));
    EnumerationSpec restricted{Model::Restricted, 2, 3, syms(2), {{Symbol{0}, Symbol{1}}, {Symbol{1}, Symbol{0}}}, {}};
    EXPECT_EQ(enumerate_graphs(restricted).graphs.size(), brute_class_count(restricted));
}

TEST(Enumerate, BudgetMarksPartial) {
    EnumerationSpec spec{Model::Simple, 3, 7};
    auto en = enumerate_graphs(spec, Budget().with_iterations(50));
    EXPECT_FALSE(en.complete);
}

TEST(Projection, CenterSetsAreDisjointAndMatchDecoder) {
    auto p = TransformParams::make(2, 1, 1);
    auto table = build_projection_table(p, sufficient_cap(p), false, Budget());
    EXPECT_TRUE(table.centers_complete);
    ASSERT_FALSE(table.by_disc.empty());
    std::set<Fingerprint> seen;
    for (const auto& [sd, qs] : table.by_disc) {
        for (const auto& q : qs) {
            EXPECT_TRUE(seen.insert(q).second);
            auto back = reconstruct_disc(decode_fingerprint(q, simple_symbols()).graph, p);
            ASSERT_TRUE(back);
            EXPECT_EQ(fingerprint(*back, Vertex{0}), sd);
        }
    }
    // One more vertex of headroom adds nothing.
    auto bigger = build_projection_table(p, sufficient_cap(p) + 1, false, Budget());
    EXPECT_EQ(bigger.centers(), table.centers());
}

TEST(Projection, SmallCapIsPartial) {
    auto p = TransformParams::make(2, 1, 1);
    auto set = gen_project_set(p, 2, Budget());
    EXPECT_FALSE(set.complete);
    EXPECT_FALSE(set.discs.empty());
}
