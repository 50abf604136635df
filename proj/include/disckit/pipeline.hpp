#pragma once

#include "budget.hpp"
#include "rewire.hpp"

namespace disckit {

// m = ceil(4 d^k (2t-1) L / (eps |G|)) with d = 2 and t the number of cycles.
inline Integer blowup_factor(std::uint32_t k, std::size_t cycles, std::size_t total, const Integer& L,
                             const Rational& eps) {
    if (cycles == 0 || total == 0) throw Error("blowup_factor of an empty family");
    Integer m = ceil(Rational(4 * ipow(2, k) * Integer(2 * cycles - 1) * L) / (eps * Rational(total)));
    return m < 1 ? Integer(1) : m;
}

// Blows each cycle up m times, opens it at its last edge and chains the results with `join`.
inline SPath cycles_to_path(const std::vector<SCycle>& cycles, std::size_t m, Symbol join) {
    if (cycles.empty()) throw Error("cycles_to_path of an empty family");
    SPath out{cycles.front().symbols, {}};
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (i) out.edges.push_back(join);
        auto big = blowup(cycles[i], m);
        out.edges.insert(out.edges.end(), big.edges.begin(), big.edges.end() - 1);
    }
    return out;
}

inline std::vector<SCycle> cycles_of(const ChainGraph& g) {
    std::vector<SCycle> out;
    for (const auto& c : g.components()) {
        if (!c.cycle) throw Error("expected a cycle family");
        out.push_back({g.symbols(), g.labels(c)});
    }
    return out;
}

struct LeftoverResult {
    std::vector<SCycle> cycles;
    bool dropped_paths = false;   // path pieces totalled fewer than 2k+2 vertices
    bool merged_paths = false;    // path pieces were chained into one extra cycle
    std::size_t path_vertices = 0;
};

// Keeps the cycles of a V1 piece and either drops or chains its path pieces.
inline LeftoverResult absorb_leftover(const ChainGraph& h, std::uint32_t k, Symbol join) {
    LeftoverResult r;
    SCycle merged{h.symbols(), {}};
    for (const auto& c : h.components()) {
        if (c.cycle) {
            r.cycles.push_back({h.symbols(), h.labels(c)});
            continue;
        }
        r.path_vertices += c.order.size();
        auto lab = h.labels(c);
        merged.edges.insert(merged.edges.end(), lab.begin(), lab.end());
        merged.edges.push_back(join);
    }
    if (r.path_vertices == 0) return r;
    if (r.path_vertices < 2 * k + 2) {
        r.dropped_paths = true;
    } else {
        r.merged_paths = true;
        r.cycles.push_back(std::move(merged));
    }
    return r;
}

enum class LMode { Observed, Naive };

inline const char* to_string(LMode m) { return m == LMode::Observed ? "observed" : "naive"; }

struct PipelineOptions {
    LMode l_mode = LMode::Observed;
    // Also try smaller phi and m than the certified ones, keeping the first output whose
    // exactly measured distance is within eps. Skips the early return.
    bool search = false;
    std::size_t max_trials = 200;
};

struct PipelineReport {
    std::uint32_t k = 0;
    Rational eps;
    LMode l_mode = LMode::Observed;
    Integer L;
    std::size_t observed_classes = 0;
    Rational size_bound;  // 24960 d^{3k} |S|^2 L^6 / eps^2
    bool early_return = false;
    bool retried_naive = false;
    bool searched = false;
    std::size_t trials = 0;

    std::size_t input_size = 0, cycle_size = 0, rewired_size = 0, leftover_size = 0, output_size = 0;
    std::size_t output_cycles = 0;
    Integer blowup;
    RewiringReport rewiring;
    LeftoverResult leftover;

    Rational dist_close, dist_rewire, dist_leftover, dist_blowup, distance;
    bool within_eps = false;
    bool within_size_bound = false;
};

struct PipelineResult {
    SPath path;
    PipelineReport report;
};

namespace detail {

inline Rational theorem_bound(std::uint32_t k, std::size_t symbols, const Integer& L, const Rational& eps) {
    Integer l6 = L * L * L * L * L * L;
    return Rational(24960 * ipow(2, 3 * k) * Integer(symbols * symbols) * l6) / (eps * eps);
}

struct Stages {
    SPath q;
    RewiringResult rewired;
    LeftoverResult leftover;
    Integer m;
};

inline std::optional<Stages> run_stages(const ChainGraph& cycle, std::uint32_t k, const Rational& phi,
                                        std::optional<Integer> m_fixed, const Integer& L, const Rational& eps,
                                        Symbol join) {
    auto rw = edge_rewiring_with_phi(cycle, k, phi);
    auto left = rw.report.identity ? LeftoverResult{cycles_of(cycle), false, false, 0}
                                   : absorb_leftover(rw.graph, k, join);
    if (left.cycles.empty()) return std::nullopt;
    std::size_t total = 0;
    for (const auto& c : left.cycles) total += c.size();
    Integer m = m_fixed ? *m_fixed : blowup_factor(k, left.cycles.size(), total, L, eps / 3);
    auto q = cycles_to_path(left.cycles, static_cast<std::size_t>(m), join);
    return Stages{std::move(q), std::move(rw), std::move(left), m};
}

}  // namespace detail

inline Integer naive_class_bound(std::uint32_t k, std::size_t symbols) { return ipow(2 * k, symbols); }

// Shorter S-path with k-disc frequencies within eps of p (d = 2).
inline PipelineResult approx_path(const SPath& p, std::uint32_t k, const Rational& eps,
                                  const PipelineOptions& opts = {}) {
    if (k < 1) throw Error("approx_path needs k >= 1");
    if (eps <= 0 || eps >= 1) throw Error("approx_path needs eps in (0,1)");
    const Symbol join = 0;
    const std::size_t S = p.symbols->size();
    const SGraph pg = p.graph();
    const FreqVector fp = freq(pg, k);
    const SCycle closed = close_cycle(p, join);
    const SGraph cg = closed.graph();
    const FreqVector fc = freq(cg, k);

    PipelineReport rep;
    rep.k = k;
    rep.eps = eps;
    rep.l_mode = opts.l_mode;
    rep.observed_classes = support_union_size(fp, fc);
    rep.L = opts.l_mode == LMode::Observed ? Integer(rep.observed_classes) : naive_class_bound(k, S);
    rep.size_bound = detail::theorem_bound(k, S, rep.L, eps);
    rep.input_size = p.size();

    auto finish = [&](SPath q, PipelineReport r) {
        r.output_size = q.size();
        r.distance = l1_dist(fp, freq(q.graph(), k));
        r.within_eps = r.distance <= eps;
        r.within_size_bound = Rational(q.size()) <= r.size_bound;
        return PipelineResult{std::move(q), std::move(r)};
    };
    auto fill = [&](PipelineReport& r, const detail::Stages& st) {
        r.cycle_size = closed.size();
        r.rewiring = st.rewired.report;
        r.rewired_size = st.rewired.graph.size();
        r.leftover = st.leftover;
        std::size_t lt = 0;
        for (const auto& c : st.leftover.cycles) lt += c.size();
        r.leftover_size = lt;
        r.output_cycles = st.leftover.cycles.size();
        r.blowup = st.m;
        auto fh = freq(st.rewired.graph.graph(), k);
        SGraph lg(0, p.symbols);
        for (const auto& c : st.leftover.cycles) lg.append(c.graph());
        auto fl = freq(lg, k);
        r.dist_close = l1_dist(fp, fc);
        r.dist_rewire = l1_dist(fc, fh);
        r.dist_leftover = l1_dist(fh, fl);
        r.dist_blowup = l1_dist(fl, freq(st.q.graph(), k));
    };

    if (opts.search && closed.size() >= 2 * k + 2) {
        rep.searched = true;
        const ChainGraph cycle = ChainGraph::from_cycles({closed});
        Rational phi_cert = rewiring_phi(k, S, rep.L, eps / (24 * Integer(ipow(2, k))));
        for (Rational phi = Rational(std::max<std::size_t>(2 * k + 2, 4 * rep.observed_classes));
             2 * phi < Rational(closed.size()) && phi <= phi_cert && rep.trials < opts.max_trials; phi *= 2) {
            auto st = detail::run_stages(cycle, k, phi, std::nullopt, rep.L, eps, join);
            if (!st) continue;
            const Integer m_cert = st->m;
            std::size_t total = 0;
            for (const auto& c : st->leftover.cycles) total += c.size();
            for (Integer m = 1; rep.trials < opts.max_trials && m * total < p.size();
                 m = std::min<Integer>(m * 2, m_cert)) {
                ++rep.trials;
                auto q = cycles_to_path(st->leftover.cycles, static_cast<std::size_t>(m), join);
                if (l1_dist(fp, freq(q.graph(), k)) <= eps) {
                    st->q = std::move(q);
                    st->m = m;
                    PipelineReport r = rep;
                    fill(r, *st);
                    return finish(std::move(st->q), std::move(r));
                }
                if (m == m_cert) break;
            }
        }
    }

    if (Rational(p.size()) <= rep.size_bound) {
        rep.early_return = true;
        return finish(p, rep);
    }

    const ChainGraph cycle = ChainGraph::from_cycles({closed});
    Rational eps_rewire = eps / Rational(24 * ipow(2, k));
    auto st = detail::run_stages(cycle, k, rewiring_phi(k, S, rep.L, eps_rewire), std::nullopt, rep.L, eps, join);
    if (!st) throw Error("approx_path: rewiring left nothing");
    PipelineReport r = rep;
    fill(r, *st);
    auto out = finish(std::move(st->q), std::move(r));
    if (!out.report.within_eps && opts.l_mode == LMode::Observed) {
        PipelineOptions naive = opts;
        naive.l_mode = LMode::Naive;
        naive.search = false;
        auto again = approx_path(p, k, eps, naive);
        again.report.retried_naive = true;
        return again;
    }
    return out;
}

}  // namespace disckit
