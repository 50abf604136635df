#include "brute.hpp"

#include <disckit/algdc.hpp>
#include <disckit/cover.hpp>

#include <gtest/gtest.h>

using namespace disckit;

namespace {

SGraph path_graph(std::uint32_t n) {
    SGraph g(n, simple_symbols());
    for (Vertex v = 0; v + 1 < n; ++v) g.connect_both(v, v + 1, 0);
    return g;
}

EnumerationSpec simple_spec(std::uint32_t d, std::uint32_t n_max) {
    return EnumerationSpec{Model::Simple, d, n_max, simple_symbols(), {}, {}};
}

}  // namespace

TEST(Cover, CoversSmallSimpleGraphs) {
    auto cover = build_cover(simple_spec(2, 6), 1, make_rational(1, 2), Budget::unlimited());
    ASSERT_TRUE(cover.universe_complete);
    ASSERT_TRUE(cover.grid_complete);
    auto check = verify_cover(cover);
    EXPECT_TRUE(check.covered);
    EXPECT_TRUE(check.within_size_bound);
    EXPECT_LE(check.worst, cover.eps);
    EXPECT_LT(cover.representatives.size(), cover.universe.size());
}

TEST(Cover, LargeEpsNeedsOneRepresentative) {
    auto cover = build_cover(simple_spec(2, 4), 1, Rational(2), Budget::unlimited());
    EXPECT_EQ(cover.representatives.size(), 1u);
    EXPECT_TRUE(verify_cover(cover).covered);
}

TEST(Realize, SingleVertexAndEdge) {
    auto iso = disc_set(SGraph(1, simple_symbols()), 1);
    auto r = realizability_search(iso, simple_spec(2, 3), 1, Budget::unlimited());
    ASSERT_EQ(r.status, SearchStatus::Found);
    EXPECT_EQ(r.witness->size(), 1u);

    auto edge = disc_set(path_graph(2), 1);
    EXPECT_EQ(edge.size(), 1u);
    r = realizability_search(edge, simple_spec(2, 3), 1, Budget::unlimited());
    ASSERT_EQ(r.status, SearchStatus::Found);
    EXPECT_EQ(r.witness->size(), 2u);
}

TEST(Realize, PathMiddleNeedsFourCycle) {
    auto middle = std::set<Fingerprint>{disc(path_graph(3), 1, 1).fingerprint()};
    auto r = realizability_search(middle, simple_spec(2, 3), 1, Budget::unlimited());
    EXPECT_EQ(r.status, SearchStatus::NotFoundUpTo);
    EXPECT_EQ(r.searched_up_to, 3u);
    r = realizability_search(middle, simple_spec(2, 4), 1, Budget::unlimited());
    ASSERT_EQ(r.status, SearchStatus::Found);
    EXPECT_EQ(r.witness->size(), 4u);
    EXPECT_EQ(r.witness->arc_count(), 8u);
}

class Algdc : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        params_ = TransformParams::make(2, 1, 1);
        oracle_ = new ImageUniverseOracle(params_, 3, Budget::unlimited());
    }
    static void TearDownTestSuite() { delete oracle_; }

    static SGraph graph(std::uint32_t n, std::initializer_list<std::pair<Vertex, Vertex>> arcs) {
        SGraph g(n, transform_symbols(params_));
        for (auto [u, v] : arcs) g.connect(u, v, 0);
        return g;
    }

    // Both procedures agree with each other on `phi`.
    static void expect_agree(const std::set<Fingerprint>& phi) {
        auto a = algdc(phi, *oracle_);
        EnumerationSpec spec{Model::SGraph, 2, 3, transform_symbols(params_), {}, {}};
        auto direct = realizability_search(phi, spec, 1, Budget::unlimited());
        ASSERT_TRUE(oracle_->complete());
        if (direct.status == SearchStatus::Found) {
            ASSERT_EQ(a.status, AlgdcStatus::Found);
            EXPECT_EQ(disc_set(*a.sgraph, 1), phi);
        } else {
            EXPECT_EQ(a.status, AlgdcStatus::NotFoundWithinBudget);
            EXPECT_TRUE(a.loop_complete);
        }
    }

    static inline TransformParams params_{};
    static inline ImageUniverseOracle* oracle_ = nullptr;
};

TEST_F(Algdc, FindsSmallGraphs) {
    auto iso = graph(1, {});
    auto loop = graph(1, {{0, 0}});
    auto edge = graph(2, {{0, 1}});
    auto bidir = graph(2, {{0, 1}, {1, 0}});
    auto tri = graph(3, {{0, 1}, {1, 2}, {2, 0}});
    for (const auto* g : {&iso, &loop, &edge, &bidir, &tri}) {
        auto phi = disc_set(*g, 1);
        auto a = algdc(phi, *oracle_);
        ASSERT_EQ(a.status, AlgdcStatus::Found);
        EXPECT_EQ(disc_set(*a.sgraph, 1), phi);
        expect_agree(phi);
    }
    auto both = disc_set(iso, 1);
    both.merge(disc_set(loop, 1));
    expect_agree(both);
}

TEST_F(Algdc, RejectsUnrealizable) {
    // The source end of an edge without its target.
    auto edge = graph(2, {{0, 1}});
    std::set<Fingerprint> phi{disc(edge, 0, 1).fingerprint()};
    auto a = algdc(phi, *oracle_);
    EXPECT_EQ(a.status, AlgdcStatus::NotFoundWithinBudget);
    EXPECT_TRUE(a.loop_complete);
    expect_agree(phi);
}

TEST_F(Algdc, AgreesWithDirectSearchOnUniverse) {
    std::mt19937_64 rng(5);
    const auto& entries = oracle_->entries();
    for (int trial = 0; trial < 12; ++trial) {
        auto phi = entries[rng() % entries.size()].sdiscs;
        if (rng() % 2 && phi.size() > 1) phi.erase(phi.begin());
        expect_agree(phi);
    }
}
