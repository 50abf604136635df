#pragma once

#include "projection.hpp"
#include "realize.hpp"

#include <algorithm>
#include <unordered_map>

namespace disckit {

namespace detail {

inline std::string set_key(const std::set<Fingerprint>& s) {
    std::string key;
    for (const auto& f : s) {
        key += f.str();
        key += '\n';
    }
    return key;
}

}  // namespace detail

// Realizability over simple graphs of max degree 2t+1, searching only encoder images of
// S-graphs with at most n_max vertices. Graphs outside the image cannot have all their q-discs
// in the generalized projection set, so for the disc sets the subset loop asks about this
// covers the same ground as a search over all simple graphs of up to (2t+2) n_max vertices.
class ImageUniverseOracle {
public:
    ImageUniverseOracle(const TransformParams& p, std::uint32_t n_max, Budget budget = Budget::from_env())
        : params_(p) {
        EnumerationSpec spec{Model::SGraph, p.d, n_max, transform_symbols(p), {}, {}};
        auto en = enumerate_graphs(spec, budget);
        complete_ = en.complete;
        DiscIndexer sdisc(p.k), qdisc(p.q);
        for (auto& h : en.graphs) {
            Entry e;
            auto enc = encode(h, p);
            for (Vertex v = 0; v < h.size(); ++v) e.sdiscs.insert(sdisc(h, v));
            for (Vertex x = 0; x < enc.graph.size(); ++x) {
                auto fp = qdisc(enc.graph, x);
                e.qdiscs.insert(fp);
                if (x % p.cluster_size() == 2 * p.t) e.centers[sdisc(h, enc.index.owner(x))].insert(fp);
                else e.others.insert(fp);
            }
            e.preimage = std::move(h);
            e.image = std::move(enc.graph);
            lookup_.emplace(detail::set_key(e.qdiscs), entries_.size());
            entries_.push_back(std::move(e));
        }
    }

    struct Entry {
        SGraph preimage, image;
        std::set<Fingerprint> sdiscs, qdiscs, others;
        std::map<Fingerprint, std::set<Fingerprint>> centers;
    };

    // A simple graph whose q-disc set is exactly `phi`, if one is in the universe.
    std::optional<SGraph> operator()(const std::set<Fingerprint>& phi) const {
        auto it = lookup_.find(detail::set_key(phi));
        if (it == lookup_.end()) return std::nullopt;
        return entries_[it->second].image;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool complete() const { return complete_; }
    const TransformParams& params() const { return params_; }

private:
    TransformParams params_;
    bool complete_ = true;
    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

enum class AlgdcStatus { Found, NotFoundWithinBudget };

inline const char* to_string(AlgdcStatus s) { return s == AlgdcStatus::Found ? "Found" : "NotFoundWithinBudget"; }

struct AlgdcResult {
    AlgdcStatus status = AlgdcStatus::NotFoundWithinBudget;
    std::optional<SGraph> sgraph;   // decoded witness; its k-disc set equals the input
    std::optional<SGraph> simple;   // the simple graph the oracle returned
    std::uint64_t iterations = 0;
    bool loop_complete = false;     // every subset choice was tried
    std::vector<std::size_t> center_pools;
    std::size_t other_pool = 0;
};

struct AlgdcOptions {
    std::uint64_t max_iterations = 1u << 22;
};

// Decides S-graph realizability of `phi` by the subset loop over projection sets, asking the
// simple-graph oracle about each candidate q-disc set. Candidate q-discs are restricted to
// those occurring in images of universe graphs whose k-disc set is exactly `phi`: a query can
// only succeed on such an image, so nothing reachable is lost. The non-center pool is walked
// from the largest subsets down.
inline AlgdcResult algdc(const std::set<Fingerprint>& phi, const ImageUniverseOracle& oracle,
                         const AlgdcOptions& opts = {}) {
    if (phi.empty()) throw Error("algdc needs a nonempty disc set");
    const auto& p = oracle.params();
    AlgdcResult r;
    std::vector<Fingerprint> targets(phi.begin(), phi.end());
    std::vector<std::set<Fingerprint>> center_sets(targets.size());
    std::set<Fingerprint> others;
    for (const auto& e : oracle.entries()) {
        if (e.sdiscs != phi) continue;
        for (std::size_t i = 0; i < targets.size(); ++i)
            if (auto it = e.centers.find(targets[i]); it != e.centers.end())
                center_sets[i].insert(it->second.begin(), it->second.end());
        others.insert(e.others.begin(), e.others.end());
    }
    std::vector<std::vector<Fingerprint>> pools;
    for (const auto& s : center_sets) {
        pools.emplace_back(s.begin(), s.end());
        r.center_pools.push_back(s.size());
    }
    const std::vector<Fingerprint> ypool(others.begin(), others.end());
    r.other_pool = ypool.size();
    for (const auto& pool : pools)
        if (pool.empty()) {
            r.loop_complete = true;  // no nonempty X_i exists
            return r;
        }

    std::vector<std::vector<char>> pick(pools.size());
    for (std::size_t i = 0; i < pools.size(); ++i) {
        pick[i].assign(pools[i].size(), 0);
        pick[i][0] = 1;
    }
    // Y runs over subsets of size m = |pool| .. 0, each size in prev_permutation order.
    std::size_t m = ypool.size();
    std::vector<char> ymask(ypool.size(), 0);
    std::fill(ymask.begin(), ymask.begin() + static_cast<std::ptrdiff_t>(m), 1);
    auto advance_y = [&] {
        if (std::prev_permutation(ymask.begin(), ymask.end())) return true;
        if (m == 0) return false;
        --m;
        std::fill(ymask.begin(), ymask.end(), 0);
        std::fill(ymask.begin(), ymask.begin() + static_cast<std::ptrdiff_t>(m), 1);
        return true;
    };
    // Binary increment; on wrap-around the pool returns to its initial subset.
    auto advance = [&](std::size_t i) {
        auto& b = pick[i];
        std::size_t j = 0;
        while (j < b.size() && b[j]) b[j++] = 0;
        if (j < b.size()) {
            b[j] = 1;
            return true;
        }
        b[0] = 1;
        return false;
    };
    while (true) {
        if (r.iterations >= opts.max_iterations) return r;
        ++r.iterations;
        std::set<Fingerprint> query;
        for (std::size_t i = 0; i < pools.size(); ++i)
            for (std::size_t j = 0; j < pools[i].size(); ++j)
                if (pick[i][j]) query.insert(pools[i][j]);
        for (std::size_t j = 0; j < ypool.size(); ++j)
            if (ymask[j]) query.insert(ypool[j]);
        if (auto g = oracle(query)) {
            auto decoded = psi(*g, p).preimage;
            if (disc_set(decoded, p.k) != phi) throw Error("algdc: decoded witness does not realize the disc set");
            r.status = AlgdcStatus::Found;
            r.sgraph = std::move(decoded);
            r.simple = std::move(*g);
            return r;
        }
        std::size_t i = 0;
        while (i < pools.size() && !advance(i)) ++i;
        if (i == pools.size() && !advance_y()) {
            r.loop_complete = true;
            return r;
        }
    }
}

}  // namespace disckit
