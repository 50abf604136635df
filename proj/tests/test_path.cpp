#include "brute.hpp"

#include <disckit/pipeline.hpp>

#include <gtest/gtest.h>

using namespace disckit;

namespace {

SPath random_path(std::mt19937_64& rng, std::size_t n, SymbolTable syms) {
    SPath p{syms, {}};
    for (std::size_t i = 0; i + 1 < n; ++i) p.edges.push_back(rng() % syms->size());
    return p;
}

std::vector<SCycle> random_cycles(std::mt19937_64& rng, std::size_t count, std::size_t min_len, std::size_t max_len,
                                  SymbolTable syms) {
    std::vector<SCycle> out;
    for (std::size_t i = 0; i < count; ++i) {
        SCycle c{syms, {}};
        std::size_t len = min_len + rng() % (max_len - min_len + 1);
        for (std::size_t j = 0; j < len; ++j) c.edges.push_back(rng() % syms->size());
        out.push_back(c);
    }
    return out;
}

// Reference: count each k-disc class by brute-force isomorphism test against class representatives.
std::vector<std::pair<SGraph, std::size_t>> brute_classes(const SGraph& g, unsigned k) {
    std::vector<std::pair<SGraph, std::size_t>> out;
    for (Vertex v = 0; v < g.size(); ++v) {
        auto d = brute::disc(g, v, k);
        bool found = false;
        for (auto& [rep, c] : out)
            if (brute::isomorphic(rep, d, true)) {
                ++c;
                found = true;
                break;
            }
        if (!found) out.push_back({d, 1});
    }
    return out;
}

}  // namespace

TEST(Undirected, SizeAndExactDistance) {
    for (std::uint32_t k : {1u, 2u, 3u})
        for (auto eps : {make_rational(1, 2), make_rational(1, 5), make_rational(1, 3)}) {
            std::size_t n = 300;
            auto r = approx_undirected(n, k, eps);
            EXPECT_EQ(Integer(r.size), floor(Rational(4 * k) / eps) + 1);
            EXPECT_EQ(r.distance, freq_dist(undirected_path(r.size), undirected_path(n), k));
            EXPECT_LE(r.distance, eps);
        }
    EXPECT_EQ(approx_undirected(5, 1, make_rational(1, 10)).size, 5u);
    EXPECT_EQ(approx_undirected(5, 1, make_rational(1, 10)).distance, 0);
    EXPECT_THROW(approx_undirected(5, 1, 0), Error);
}

TEST(Undirected, FreqMatchesBruteCounting) {
    auto g = undirected_path(9);
    auto f = freq(g, 2);
    auto ref = brute_classes(g, 2);
    ASSERT_EQ(f.size(), ref.size());
    for (auto& [rep, c] : ref) EXPECT_EQ(f.at(fingerprint(rep, Vertex{0})), Rational(c, 9));
}

TEST(Mappings, KStringConcatenatesLabels) {
    auto syms = make_symbols({"a", "ab", "b", "aa", "bb", "aba"});
    SPath p{syms, {0, 1, 2, 3, 4, 5}};
    auto mapped = map_freq(p.graph(), 3, mappings::k_string());
    ASSERT_TRUE(mapped.count("aabbaabbaba"));
    EXPECT_EQ(mapped.at("aabbaabbaba"), make_rational(1, 7));
}

TEST(Mappings, RightDiscAndModuloBound) {
    std::mt19937_64 rng(31);
    auto syms = make_symbols({"a", "b"});
    for (int trial = 0; trial < 30; ++trial) {
        auto p = random_path(rng, 5 + rng() % 30, syms);
        auto q = random_path(rng, 5 + rng() % 30, syms);
        for (auto m : {mappings::right_disc(), mappings::k_string(), mappings::constant()}) {
            auto mp = map_freq(p.graph(), 2, m), mq = map_freq(q.graph(), 2, m);
            EXPECT_LE(l1_dist(mp, mq), freq_dist(p.graph(), q.graph(), 2));
        }
    }
    SPath ab{syms, {0, 1}};
    auto mapped = map_freq(ab.graph(), 1, mappings::right_disc());
    EXPECT_EQ(mapped.at("@->a"), make_rational(1, 3));
    EXPECT_EQ(mapped.at("@->b"), make_rational(1, 3));
    EXPECT_EQ(mapped.at("@"), make_rational(1, 3));
    SCycle loop{syms, {0}};
    EXPECT_THROW(map_freq(loop.graph(), 1, mappings::right_disc()), Error);
}

TEST(Blowup, PreservesFrequencies) {
    std::mt19937_64 rng(32);
    auto syms = make_symbols({"a", "b", "c"});
    for (int trial = 0; trial < 20; ++trial) {
        std::uint32_t k = 1 + trial % 2;
        auto c = random_cycles(rng, 1, 2 * k + 2, 12, syms)[0];
        for (std::size_t m : {1u, 2u, 5u}) {
            auto b = blowup(c, m);
            EXPECT_EQ(b.size(), m * c.size());
            EXPECT_EQ(freq(b.graph(), k), freq(c.graph(), k));
        }
    }
}

TEST(ChainGraph, ComponentsAndWindows) {
    auto syms = make_symbols({"a", "b"});
    auto g = ChainGraph::from_cycles({SCycle{syms, {0, 1, 0, 1}}, SCycle{syms, {1, 1, 1, 0, 0}}});
    auto comps = g.components();
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_TRUE(comps[0].cycle);
    EXPECT_EQ(comps[1].order.size(), 5u);
    auto w = window_at(g, 0, 2);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->vertices, (std::vector<Vertex>{3, 0, 1, 2}));
    EXPECT_EQ(w->word, (std::vector<Symbol>{1, 0, 1}));
    EXPECT_TRUE(g.within(0, 2, 3));
    EXPECT_FALSE(g.within(0, 4, 3));
}

TEST(Rewire, EachStepDropsCutByTwoAndKeepsDiscs) {
    std::mt19937_64 rng(33);
    auto syms = make_symbols({"a", "b"});
    int total_rewires = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::uint32_t k = 1 + trial % 2;
        auto g = ChainGraph::from_cycles(random_cycles(rng, 1 + rng() % 3, 2 * k + 2, 40, syms));
        std::vector<char> in1(g.size());
        for (auto& x : in1) x = rng() % 2;
        auto before = disc_fingerprints(g.graph(), k);
        while (auto pr = find_rewire_pair(g, in1, k)) {
            auto c0 = cut(g, in1);
            auto comps0 = g.components().size();
            rewire(g, *pr);
            ++total_rewires;
            ASSERT_EQ(cut(g, in1) + 2, c0);
            ASSERT_EQ(disc_fingerprints(g.graph(), k), before);
            ASSERT_TRUE(all_cycles_at_least(g, 2 * k + 2));
            auto comps1 = g.components().size();
            ASSERT_TRUE(comps1 == comps0 + 1 || comps1 + 1 == comps0);
        }
    }
    EXPECT_GT(total_rewires, 20);
}

TEST(Rewire, MeasureConnectionInequalities) {
    std::mt19937_64 rng(34);
    auto syms = make_symbols({"a", "b"});
    for (int trial = 0; trial < 20; ++trial) {
        std::uint32_t k = 1 + trial % 2;
        auto g = ChainGraph::from_cycles(random_cycles(rng, 2, 2 * k + 2, 30, syms));
        std::vector<char> in1(g.size()), all(g.size(), 1), in2(g.size());
        for (auto& x : in1) x = rng() % 2;
        for (Vertex v = 0; v < g.size(); ++v) in2[v] = !in1[v];
        auto part = make_partition(in1);
        if (part.first.empty() || part.second.empty()) continue;
        auto sg = g.graph();
        Rational a = alpha(sg, part.first, part.second, k);
        Rational n1 = part.first.size(), n2 = part.second.size(), n = g.size(), s = syms->size();
        std::set<std::vector<Symbol>> words;
        for (Vertex v = 0; v < g.size(); ++v)
            if (auto w = window_at(g, v, k)) words.insert(w->word);
        for (const auto& w : words) {
            auto e1 = e_count(g, k, w, in1, all), e2 = e_count(g, k, w, in2, all);
            EXPECT_LE(abs(Rational(e1) / n1 - Rational(e2) / n2), a * s);
            auto f1 = e_count(g, k, w, all, in1), f2 = e_count(g, k, w, all, in2);
            EXPECT_LE(abs(Rational(f1) / n1 - Rational(f2) / n2), a * s);
            auto x12 = e_count(g, k, w, in1, in2), x21 = e_count(g, k, w, in2, in1);
            EXPECT_LE(abs(Rational(x12) - Rational(x21)), 2 * (n1 * n2 / n) * a * s);
        }
    }
}

TEST(EdgeRewiring, ReportInvariants) {
    std::mt19937_64 rng(35);
    auto syms = make_symbols({"a", "b"});
    for (int trial = 0; trial < 10; ++trial) {
        std::uint32_t k = 1 + trial % 2;
        auto g = ChainGraph::from_cycles(random_cycles(rng, 1, 200, 300, syms));
        auto r = edge_rewiring_with_phi(g, k, 40);
        EXPECT_FALSE(r.report.identity);
        EXPECT_TRUE(r.report.v1_in_range);
        EXPECT_TRUE(r.report.cut_bound_holds);
        EXPECT_EQ(r.report.cut_before - r.report.cut_after, 2 * r.report.rewires);
        EXPECT_EQ(r.graph.size(), r.report.v1);
        EXPECT_LE(Rational(r.graph.size()), 2 * Rational(40) + Rational(r.report.classes));
    }
    auto small = ChainGraph::from_cycles(random_cycles(rng, 1, 10, 10, syms));
    EXPECT_TRUE(edge_rewiring_with_phi(small, 1, 5).report.identity);
    EXPECT_THROW(edge_rewiring_with_phi(ChainGraph::from_cycles({SCycle{syms, {0, 1, 0}}}), 1, 1), Error);
}

TEST(CyclesToPath, SizeAndJoins) {
    auto syms = make_symbols({"a", "b"});
    std::vector<SCycle> cs{SCycle{syms, {1, 1, 1, 1}}, SCycle{syms, {1, 1, 1, 1, 1}}};
    auto p = cycles_to_path(cs, 3, 0);
    EXPECT_EQ(p.size(), 27u);
    EXPECT_EQ(std::count(p.edges.begin(), p.edges.end(), Symbol{0}), 1);
    EXPECT_EQ(blowup_factor(1, 1, 100, 4, make_rational(1, 10)), 4);
}

TEST(ApproxPath, EarlyReturnBelowBound) {
    std::mt19937_64 rng(36);
    auto syms = make_symbols({"a", "b"});
    auto p = random_path(rng, 500, syms);
    auto r = approx_path(p, 1, make_rational(1, 5));
    EXPECT_TRUE(r.report.early_return);
    EXPECT_EQ(r.report.distance, 0);
    EXPECT_EQ(r.path.edges, p.edges);
}

TEST(ApproxPath, SearchCompressesWithinEps) {
    std::mt19937_64 rng(37);
    auto syms = make_symbols({"a", "b"});
    auto p = random_path(rng, 3000, syms);
    PipelineOptions opts;
    opts.search = true;
    auto r = approx_path(p, 1, make_rational(1, 5), opts);
    EXPECT_TRUE(r.report.within_eps);
    EXPECT_FALSE(r.report.early_return);
    EXPECT_LT(r.path.size(), p.size());
    EXPECT_EQ(r.report.distance, freq_dist(p.graph(), r.path.graph(), 1));
    EXPECT_TRUE(r.report.rewiring.cut_bound_holds);
}
