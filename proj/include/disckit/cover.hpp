#pragma once

#include "enumerate.hpp"

#include <numeric>

namespace disckit {

struct Cover {
    std::uint32_t k = 0;
    Rational eps;
    std::vector<Fingerprint> classes;        // coordinates of the grid (C = classes.size())
    std::vector<SGraph> universe;            // enumerated graphs
    std::vector<std::size_t> representatives;  // indices into universe, ascending
    bool universe_complete = false;
    bool grid_complete = true;
    std::uint64_t grid_points = 0;
    Rational size_bound;  // (2C/eps)^C
};

// Grid step eps/(2C); each grid point picks the first enumerated graph within eps/2.
inline Cover build_cover(const EnumerationSpec& spec, std::uint32_t k, const Rational& eps,
                         Budget budget = Budget::from_env()) {
    if (eps <= 0) throw Error("cover needs eps > 0");
    Cover cover;
    cover.k = k;
    cover.eps = eps;
    auto en = enumerate_graphs(spec, budget);
    cover.universe = std::move(en.graphs);
    cover.universe_complete = en.complete;
    if (cover.universe.empty()) return cover;

    std::vector<FreqVector> freqs;
    std::set<Fingerprint> classes;
    for (const auto& g : cover.universe) {
        freqs.push_back(freq(g, k));
        for (const auto& [fp, r] : freqs.back()) classes.insert(fp);
    }
    cover.classes.assign(classes.begin(), classes.end());
    const std::size_t C = cover.classes.size();
    cover.size_bound = pow(Rational(2 * C) / eps, static_cast<unsigned>(C));
    if (eps >= 2) {
        // Any two frequency vectors are within L1 distance 2.
        cover.representatives = {0};
        return cover;
    }

    // Exact integer arithmetic after scaling every coordinate by a common denominator.
    const Rational step = eps / Rational(2 * C);
    Integer scale = boost::multiprecision::denominator(step);
    for (const auto& g : cover.universe) scale = boost::multiprecision::lcm(scale, Integer(g.size()));
    const std::int64_t step_scaled = to_int64(boost::multiprecision::numerator(step * Rational(scale)));
    const std::int64_t half = to_int64(boost::multiprecision::numerator(eps / 2 * Rational(scale)));
    std::vector<std::vector<std::int64_t>> pts;
    for (const auto& f : freqs) {
        std::vector<std::int64_t> x(C, 0);
        for (std::size_t j = 0; j < C; ++j)
            if (auto it = f.find(cover.classes[j]); it != f.end())
                x[j] = to_int64(boost::multiprecision::numerator(it->second * Rational(scale)));
        pts.push_back(std::move(x));
    }
    const std::int64_t ticks = to_int64(floor(Rational(2 * C) / eps));
    std::vector<char> chosen(cover.universe.size(), 0);
    std::vector<std::int64_t> idx(C, 1);
    if (ticks >= 1) {
        while (true) {
            if (!budget.tick()) {
                cover.grid_complete = false;
                break;
            }
            ++cover.grid_points;
            for (std::size_t g = 0; g < pts.size(); ++g) {
                std::int64_t d = 0;
                for (std::size_t j = 0; j < C && d <= half; ++j) d += std::llabs(pts[g][j] - idx[j] * step_scaled);
                if (d <= half) {
                    chosen[g] = 1;
                    break;
                }
            }
            std::size_t j = 0;
            while (j < C && ++idx[j] > ticks) idx[j++] = 1;
            if (j == C) break;
        }
    }
    for (std::size_t g = 0; g < chosen.size(); ++g)
        if (chosen[g]) cover.representatives.push_back(g);
    return cover;
}

struct CoverCheck {
    bool covered = false;           // every universe graph within eps of a representative
    bool within_size_bound = false;  // |W| <= (2C/eps)^C
    Rational worst;                  // max over graphs of the distance to the nearest representative
};

inline CoverCheck verify_cover(const Cover& cover) {
    CoverCheck out;
    out.within_size_bound = Rational(cover.representatives.size()) <= cover.size_bound;
    std::vector<FreqVector> reps;
    for (auto i : cover.representatives) reps.push_back(freq(cover.universe[i], cover.k));
    out.covered = !reps.empty() || cover.universe.empty();
    for (const auto& g : cover.universe) {
        auto f = freq(g, cover.k);
        std::optional<Rational> best;
        for (const auto& r : reps) {
            auto d = l1_dist(f, r);
            if (!best || d < *best) best = d;
        }
        if (!best) continue;
        out.worst = std::max(out.worst, *best);
        if (*best > cover.eps) out.covered = false;
    }
    return out;
}

}  // namespace disckit
