#pragma once

#include "io.hpp"
#include "rewire.hpp"
#include "transform.hpp"

#include <random>
#include <thread>

namespace disckit::lemmas {

enum class Lemma {
    FreqDiff,
    FreqDiffCorrected,
    EdgeChange,
    WeightShifting,
    FreqDiffModulo,
    FreqDiffEasy,
    ProjProp2,
    ProjProp4,
    ProjProp5,
    ProjProp6,
    ProjSubDiff,
    MeasureConnection,
    MeasureConnection2,
    RewireCutBound,
    App1,
};

inline constexpr std::array kAllLemmas{
    Lemma::FreqDiff,          Lemma::FreqDiffCorrected, Lemma::EdgeChange,        Lemma::WeightShifting,
    Lemma::FreqDiffModulo,    Lemma::FreqDiffEasy,      Lemma::ProjProp2,         Lemma::ProjProp4,
    Lemma::ProjProp5,         Lemma::ProjProp6,         Lemma::ProjSubDiff,       Lemma::MeasureConnection,
    Lemma::MeasureConnection2, Lemma::RewireCutBound,   Lemma::App1,
};

inline const char* to_string(Lemma l) {
    switch (l) {
        case Lemma::FreqDiff: return "FreqDiff";
        case Lemma::FreqDiffCorrected: return "FreqDiffCorrected";
        case Lemma::EdgeChange: return "EdgeChange";
        case Lemma::WeightShifting: return "WeightShifting";
        case Lemma::FreqDiffModulo: return "FreqDiffModulo";
        case Lemma::FreqDiffEasy: return "FreqDiffEasy";
        case Lemma::ProjProp2: return "ProjProp2";
        case Lemma::ProjProp4: return "ProjProp4";
        case Lemma::ProjProp5: return "ProjProp5";
        case Lemma::ProjProp6: return "ProjProp6";
        case Lemma::ProjSubDiff: return "ProjSubDiff";
        case Lemma::MeasureConnection: return "MeasureConnection";
        case Lemma::MeasureConnection2: return "MeasureConnection2";
        case Lemma::RewireCutBound: return "RewireCutBound";
        case Lemma::App1: return "App1";
    }
    return "?";
}

inline Lemma parse_lemma(const std::string& name) {
    for (auto l : kAllLemmas)
        if (name == to_string(l)) return l;
    throw Error("unknown lemma: " + name);
}

enum class Family { SGraphs, SubgraphPairs, EdgeEdits, PathCycles, TransformImages, Parameters };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::SGraphs: return "sgraphs";
        case Family::SubgraphPairs: return "subgraph-pairs";
        case Family::EdgeEdits: return "edge-edits";
        case Family::PathCycles: return "path-cycles";
        case Family::TransformImages: return "transform-images";
        case Family::Parameters: return "parameters";
    }
    return "?";
}

inline Family family_of(Lemma l) {
    switch (l) {
        case Lemma::FreqDiff:
        case Lemma::FreqDiffCorrected: return Family::SubgraphPairs;
        case Lemma::EdgeChange: return Family::EdgeEdits;
        case Lemma::WeightShifting:
        case Lemma::FreqDiffModulo:
        case Lemma::FreqDiffEasy: return Family::SGraphs;
        case Lemma::ProjProp2:
        case Lemma::ProjProp4:
        case Lemma::ProjProp5:
        case Lemma::ProjProp6:
        case Lemma::ProjSubDiff: return Family::TransformImages;
        case Lemma::MeasureConnection:
        case Lemma::MeasureConnection2:
        case Lemma::RewireCutBound: return Family::PathCycles;
        case Lemma::App1: return Family::Parameters;
    }
    return Family::SGraphs;
}

struct Instance {
    Family family = Family::SGraphs;
    std::uint64_t seed = 0;
    std::size_t index = 0;
    std::uint32_t d = 2, k = 1;
    std::vector<SGraph> graphs;
    std::vector<SCycle> cycles;   // path-cycles
    std::vector<char> in_first;   // path-cycles partition
    std::uint32_t t = 0, q = 0;   // parameters
    Rational eps;                 // parameters
    std::uint32_t mapping = 0;    // sgraphs: which DiscMapping FreqDiffModulo uses
};

namespace detail {

inline SymbolTable letters(std::uint32_t n) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    return make_symbols(names);
}

// Portable draws: raw mt19937_64 output reduced by modulo, no std distributions.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

inline SGraph random_sgraph(std::mt19937_64& rng, std::size_t n, std::uint32_t d, SymbolTable syms,
                            std::uint32_t loop_percent) {
    SGraph g(n, syms);
    if (n == 0) return g;
    for (std::size_t i = 0; i < 2 * n * d; ++i) {
        Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
        if (u == v && rng() % 100 >= loop_percent) continue;
        auto s = static_cast<Symbol>(rng() % syms->size());
        auto old = g.info(u, v);
        g.set(u, v, s);
        if (g.degree(u) > d || g.degree(v) > d) g.set(u, v, old);
    }
    return g;
}

inline SGraph without_loops(SGraph g) {
    for (Vertex v = 0; v < g.size(); ++v) g.set(v, v, std::nullopt);
    return g;
}

inline std::size_t info_difference(const SGraph& a, const SGraph& b) {
    std::size_t m = 0;
    for (Vertex u = 0; u < a.size(); ++u)
        for (Vertex v = 0; v < a.size(); ++v)
            if (a.info(u, v) != b.info(u, v)) ++m;
    return m;
}

inline std::vector<std::vector<Vertex>> components(const SGraph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(g.size(), 0);
    for (Vertex s = 0; s < g.size(); ++s) {
        if (seen[s]) continue;
        auto dist = g.distances(s);
        out.emplace_back();
        for (Vertex v = 0; v < g.size(); ++v)
            if (dist[v] != kUnreachable) {
                seen[v] = 1;
                out.back().push_back(v);
            }
    }
    return out;
}

}  // namespace detail

inline Instance make_instance(Family family, std::uint64_t seed, std::size_t index) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * (index + 1));
    Instance in;
    in.family = family;
    in.seed = seed;
    in.index = index;
    using detail::draw;
    switch (family) {
        case Family::SGraphs: {
            in.d = static_cast<std::uint32_t>(draw(rng, 2, 3));
            in.k = static_cast<std::uint32_t>(draw(rng, 1, 2));
            auto syms = detail::letters(static_cast<std::uint32_t>(draw(rng, 1, 2)));
            in.graphs.push_back(detail::random_sgraph(rng, draw(rng, 1, 12), in.d, syms, 20));
            in.graphs.push_back(detail::random_sgraph(rng, draw(rng, 1, 12), in.d, syms, 20));
            // Every vertex carries a loop, so none of these discs occur in a loop-free graph.
            SGraph bad(draw(rng, 1, 4), syms);
            for (Vertex v = 0; v < bad.size(); ++v) bad.set(v, v, static_cast<Symbol>(rng() % syms->size()));
            if (in.d >= 3)
                for (Vertex v = 0; v + 1 < bad.size(); v += 2) bad.connect(v, v + 1, static_cast<Symbol>(rng() % syms->size()));
            in.graphs.push_back(std::move(bad));
            in.mapping = static_cast<std::uint32_t>(rng() % 4);
            break;
        }
        case Family::SubgraphPairs: {
            in.d = static_cast<std::uint32_t>(draw(rng, 2, 3));
            in.k = static_cast<std::uint32_t>(draw(rng, 1, 2));
            auto syms = detail::letters(static_cast<std::uint32_t>(draw(rng, 1, 2)));
            auto g = detail::random_sgraph(rng, draw(rng, 1, 14), in.d, syms, 20);
            std::vector<Vertex> keep;
            for (Vertex v = 0; v < g.size(); ++v)
                if (rng() % 3) keep.push_back(v);
            if (keep.empty()) keep.push_back(static_cast<Vertex>(rng() % g.size()));
            auto h = g.induced(keep);
            in.graphs = {std::move(g), std::move(h)};
            break;
        }
        case Family::EdgeEdits: {
            in.d = static_cast<std::uint32_t>(draw(rng, 2, 3));
            in.k = static_cast<std::uint32_t>(draw(rng, 1, 2));
            auto syms = detail::letters(static_cast<std::uint32_t>(draw(rng, 1, 2)));
            auto g = detail::random_sgraph(rng, draw(rng, 2, 30), in.d, syms, 20);
            auto h = g;
            // Rewrites keep degrees; additions are retried until one fits.
            auto edits = draw(rng, 1, 3);
            for (std::uint64_t e = 0, tries = 0; e < edits && tries < 100; ++tries) {
                Vertex u = static_cast<Vertex>(rng() % h.size()), v = static_cast<Vertex>(rng() % h.size());
                auto old = h.info(u, v);
                std::optional<Symbol> val;
                if (!old || rng() % 2) val = static_cast<Symbol>(rng() % syms->size());
                if (val == old) continue;
                h.set(u, v, val);
                if (h.degree(u) > in.d || h.degree(v) > in.d) h.set(u, v, old);
                else ++e;
            }
            in.graphs = {std::move(g), std::move(h)};
            break;
        }
        case Family::PathCycles: {
            in.k = static_cast<std::uint32_t>(draw(rng, 1, 2));
            auto syms = detail::letters(static_cast<std::uint32_t>(draw(rng, 1, 2)));
            auto count = draw(rng, 1, 3);
            std::size_t total = 0;
            for (std::uint64_t c = 0; c < count; ++c) {
                SCycle cy{syms, {}};
                auto len = draw(rng, 2 * in.k + 2, 40);
                for (std::uint64_t j = 0; j < len; ++j) cy.edges.push_back(static_cast<Symbol>(rng() % syms->size()));
                total += len;
                in.cycles.push_back(std::move(cy));
            }
            in.in_first.resize(total);
            for (auto& x : in.in_first) x = static_cast<char>(rng() % 2);
            in.in_first[0] = 1;
            in.in_first[total - 1] = 0;
            break;
        }
        case Family::TransformImages: {
            in.d = 2;
            in.k = 1;
            auto syms = detail::letters(1);
            auto p = TransformParams::make(in.d, in.k, 1);
            auto g = detail::random_sgraph(rng, draw(rng, 1, 6), in.d, syms, 20);
            auto h = detail::random_sgraph(rng, draw(rng, 1, 6), in.d, syms, 20);
            auto x = encode(g, p).graph;
            // Noise: a few edge flips plus a disjoint random simple graph.
            auto edits = draw(rng, 0, 1);
            for (std::uint64_t e = 0; e < edits; ++e) {
                Vertex a = static_cast<Vertex>(rng() % x.size()), b = static_cast<Vertex>(rng() % x.size());
                if (a == b) continue;
                if (x.info(a, b)) {
                    x.set(a, b, std::nullopt);
                    x.set(b, a, std::nullopt);
                } else {
                    x.connect_both(a, b);
                    if (x.degree(a) > p.image_degree() || x.degree(b) > p.image_degree()) {
                        x.set(a, b, std::nullopt);
                        x.set(b, a, std::nullopt);
                    }
                }
            }
            SGraph noise(draw(rng, 0, 8), simple_symbols());
            for (std::size_t i = 0; i < 2 * noise.size(); ++i) {
                Vertex a = static_cast<Vertex>(rng() % noise.size()), b = static_cast<Vertex>(rng() % noise.size());
                if (a == b || noise.info(a, b)) continue;
                noise.connect_both(a, b);
                if (noise.degree(a) > 3 || noise.degree(b) > 3) {
                    noise.set(a, b, std::nullopt);
                    noise.set(b, a, std::nullopt);
                }
            }
            x.append(noise);
            in.graphs = {std::move(g), std::move(h), std::move(x)};
            break;
        }
        case Family::Parameters: {
            in.t = static_cast<std::uint32_t>(draw(rng, 1, 10));
            in.q = static_cast<std::uint32_t>(draw(rng, 1, 10));
            auto den = draw(rng, 2, 1000);
            in.eps = Rational(Integer(draw(rng, 1, den - 1)), Integer(den));
            break;
        }
    }
    return in;
}

inline std::vector<Instance> generate_instances(Family family, std::uint64_t seed, std::size_t count) {
    std::vector<Instance> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(make_instance(family, seed, i));
    return out;
}

inline io::Json describe(const Instance& in) {
    io::Json j{{"family", to_string(in.family)}, {"seed", in.seed}, {"index", in.index}};
    switch (in.family) {
        case Family::Parameters:
            j["t"] = in.t;
            j["q"] = in.q;
            j["eps"] = disckit::to_string(in.eps);
            break;
        case Family::PathCycles: {
            j["k"] = in.k;
            io::Json cycles = io::Json::array();
            for (const auto& c : in.cycles) cycles.push_back(io::graph_to_json(c.graph()));
            j["cycles"] = std::move(cycles);
            std::string part;
            for (char c : in.in_first) part += c ? '1' : '2';
            j["partition"] = part;
            break;
        }
        default: {
            j["d"] = in.d;
            j["k"] = in.k;
            io::Json graphs = io::Json::array();
            for (const auto& g : in.graphs) graphs.push_back(io::graph_to_json(g));
            j["graphs"] = std::move(graphs);
            if (in.family == Family::SGraphs) j["mapping"] = in.mapping;
        }
    }
    return j;
}

enum class Relation { Le, Eq };
enum class Verdict { Pass, Fail, Skip };

inline const char* to_string(Relation r) { return r == Relation::Le ? "le" : "eq"; }
inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skip: return "skip";
    }
    return "?";
}

struct LemmaCheck {
    Lemma lemma = Lemma::FreqDiff;
    Instance instance;
    Rational lhs, rhs;
    Relation relation = Relation::Le;
    Verdict verdict = Verdict::Skip;
    std::string note;  // reason for a skip
};

inline DiscMapping mapping_by_index(std::uint32_t i) {
    switch (i % 4) {
        case 0: return mappings::identity();
        case 1: return mappings::constant();
        case 2: return mappings::underlying();
        default: return mappings::hash_bucket(3);
    }
}

namespace detail {

inline LemmaCheck finish(LemmaCheck c) {
    c.verdict = (c.relation == Relation::Le ? c.lhs <= c.rhs : c.lhs == c.rhs) ? Verdict::Pass : Verdict::Fail;
    return c;
}

inline LemmaCheck skip(LemmaCheck c, std::string why) {
    c.verdict = Verdict::Skip;
    c.note = std::move(why);
    return c;
}

inline bool degree_ok(const SGraph& g, std::uint32_t d) { return g.size() == 0 || g.max_degree() <= d; }

// Per image vertex: the reconstructed k-disc fingerprint, or nothing when not center-decodable.
inline std::vector<std::optional<Fingerprint>> decoded_centers(const SGraph& image, const TransformParams& p) {
    std::vector<std::optional<Fingerprint>> out(image.size());
    for (Vertex x = 0; x < image.size(); ++x) {
        if (image.neighbors(x).size() != p.image_degree()) continue;
        if (auto back = reconstruct_disc(disc(image, x, p.q).graph, p)) out[x] = fingerprint(*back, Vertex{0});
    }
    return out;
}

// Per (word, direction): the two sides of MeasureConnection (first) and MeasureConnection2.
inline std::pair<Rational, Rational> measure_connection(const Instance& in, Rational& alpha_out) {
    auto g = ChainGraph::from_cycles(in.cycles);
    auto part = make_partition(in.in_first);
    std::vector<char> all(g.size(), 1), in2(g.size());
    for (Vertex v = 0; v < g.size(); ++v) in2[v] = !in.in_first[v];
    alpha_out = alpha(g.graph(), part.first, part.second, in.k);
    Rational n1 = part.first.size(), n2 = part.second.size();
    std::set<std::vector<Symbol>> words;
    for (Vertex v = 0; v < g.size(); ++v)
        if (auto w = window_at(g, v, in.k)) words.insert(w->word);
    Rational worst1, worst2;
    for (const auto& w : words) {
        auto e1 = e_count(g, in.k, w, in.in_first, all), e2 = e_count(g, in.k, w, in2, all);
        auto f1 = e_count(g, in.k, w, all, in.in_first), f2 = e_count(g, in.k, w, all, in2);
        worst1 = std::max(worst1, abs(Rational(e1) / n1 - Rational(e2) / n2));
        worst1 = std::max(worst1, abs(Rational(f1) / n1 - Rational(f2) / n2));
        auto x12 = e_count(g, in.k, w, in.in_first, in2), x21 = e_count(g, in.k, w, in2, in.in_first);
        worst2 = std::max(worst2, abs(Rational(x12) - Rational(x21)));
    }
    return {worst1, worst2};
}

}  // namespace detail

inline LemmaCheck check(Lemma lemma, const Instance& in) {
    LemmaCheck c;
    c.lemma = lemma;
    c.instance = in;
    if (in.family != family_of(lemma)) throw Error(std::string("instance family does not fit ") + to_string(lemma));
    const Integer dk = ipow(in.d, in.k);
    switch (lemma) {
        case Lemma::FreqDiff:
        case Lemma::FreqDiffCorrected: {
            // The stated constant 1+2d^k is too small: a surviving vertex whose disc changes moves
            // weight out of one class and into another. Counting both gives 4d^k.
            const auto &g = in.graphs.at(0), &h = in.graphs.at(1);
            if (!detail::degree_ok(g, in.d)) return detail::skip(c, "degree bound violated");
            if (h.size() == 0) return detail::skip(c, "empty subgraph");
            c.lhs = freq_dist(g, h, in.k);
            Integer factor = lemma == Lemma::FreqDiff ? 1 + 2 * dk : 4 * dk;
            c.rhs = Rational(factor) * Rational(Integer(g.size() - h.size()), Integer(h.size()));
            return detail::finish(c);
        }
        case Lemma::EdgeChange: {
            const auto &g = in.graphs.at(0), &h = in.graphs.at(1);
            if (!detail::degree_ok(g, in.d) || !detail::degree_ok(h, in.d)) return detail::skip(c, "degree bound violated");
            auto m = detail::info_difference(g, h);
            if (m == 0) return detail::skip(c, "no edge changed");
            auto fg = freq(g, in.k), fh = freq(h, in.k);
            auto classes = support_union_size(fg, fh);
            c.lhs = l1_dist(fg, fh);
            c.rhs = Rational(4 * dk * Integer(m) * Integer(classes), Integer(g.size()));
            return detail::finish(c);
        }
        case Lemma::WeightShifting: {
            // G loop-free; H1 = b + G + (loop graph); H2 drops the H1 components whose discs G never shows.
            auto G = detail::without_loops(in.graphs.at(0));
            auto H1 = detail::without_loops(in.graphs.at(1));
            H1.append(G);
            H1.append(in.graphs.at(2));
            auto fg = freq(G, in.k), f1 = freq(H1, in.k);
            auto fps = disc_fingerprints(H1, in.k);
            std::vector<Vertex> keep;
            for (const auto& comp : detail::components(H1)) {
                bool seen = std::any_of(comp.begin(), comp.end(), [&](Vertex v) { return fg.count(fps[v]) > 0; });
                if (seen) keep.insert(keep.end(), comp.begin(), comp.end());
            }
            if (keep.empty()) return detail::skip(c, "H2 would be empty");
            std::sort(keep.begin(), keep.end());
            auto f2 = freq(H1.induced(keep), in.k);
            for (const auto& [fp, r] : f1) {
                auto it = f2.find(fp);
                Rational v2 = it == f2.end() ? Rational(0) : it->second;
                if (v2 < r && fg.count(fp)) return detail::skip(c, "weight-shifting hypothesis fails");
            }
            c.lhs = l1_dist(fg, f2);
            c.rhs = l1_dist(fg, f1);
            return detail::finish(c);
        }
        case Lemma::FreqDiffModulo: {
            const auto &a = in.graphs.at(0), &b = in.graphs.at(1);
            auto m = mapping_by_index(in.mapping);
            c.lhs = l1_dist(map_freq(a, in.k, m), map_freq(b, in.k, m));
            c.rhs = freq_dist(a, b, in.k);
            return detail::finish(c);
        }
        case Lemma::FreqDiffEasy: {
            const auto &a = in.graphs.at(0), &b = in.graphs.at(1);
            c.lhs = freq_dist(underlying(a), underlying(b), in.k);
            c.rhs = freq_dist(a, b, in.k);
            return detail::finish(c);
        }
        case Lemma::ProjProp2:
        case Lemma::ProjProp4:
        case Lemma::ProjProp5: {
            const auto& g = in.graphs.at(0);
            auto p = TransformParams::make(in.d, in.k, static_cast<std::uint32_t>(g.symbols()->size()));
            auto image = encode(g, p).graph;
            auto centers = detail::decoded_centers(image, p);
            c.relation = Relation::Eq;
            if (lemma == Lemma::ProjProp2) {
                auto hits = std::count_if(centers.begin(), centers.end(), [](const auto& f) { return f.has_value(); });
                c.lhs = Rational(Integer(hits), Integer(image.size()));
                c.rhs = Rational(1, p.cluster_size());
                return detail::finish(c);
            }
            // Sum over occurring k-discs of |lhs - rhs|, against 0.
            CountVector projected;
            for (const auto& f : centers)
                if (f) ++projected[*f];
            auto counts = cnt(g, in.k);
            Rational gap;
            for (const auto& [fp, n] : counts) {
                auto it = projected.find(fp);
                std::size_t proj = it == projected.end() ? 0 : it->second;
                if (lemma == Lemma::ProjProp4) {
                    gap += abs(Rational(Integer(n)) - Rational(Integer(proj)));
                } else {
                    Rational lhs = Rational(Integer(n), Integer(g.size()));
                    Rational rhs = Rational(p.cluster_size()) * Rational(Integer(proj), Integer(image.size()));
                    gap += abs(lhs - rhs);
                }
            }
            for (const auto& [fp, n] : projected)
                if (!counts.count(fp)) gap += Rational(Integer(n));
            c.lhs = gap;
            c.rhs = 0;
            return detail::finish(c);
        }
        case Lemma::ProjProp6: {
            const auto &g = in.graphs.at(0), &h = in.graphs.at(1);
            auto p = TransformParams::make(in.d, in.k, static_cast<std::uint32_t>(g.symbols()->size()));
            c.lhs = freq_dist(h, g, in.k);
            c.rhs = Rational(p.cluster_size()) * freq_dist(encode(h, p).graph, encode(g, p).graph, p.q);
            return detail::finish(c);
        }
        case Lemma::ProjSubDiff: {
            const auto& x = in.graphs.at(2);
            auto p = TransformParams::make(in.d, in.k, 1);
            auto r = psi(x, p);
            if (r.graph.size() == 0) return detail::skip(c, "psi is empty");
            Rational proj = Rational(Integer(r.centers.size()), Integer(x.size()));
            c.lhs = freq_dist(x, r.graph, p.q);
            c.rhs = Rational(1 + 2 * ipow(p.image_degree(), p.q)) * (1 / (Rational(p.cluster_size()) * proj) - 1);
            return detail::finish(c);
        }
        case Lemma::MeasureConnection:
        case Lemma::MeasureConnection2: {
            Rational a;
            auto [w1, w2] = detail::measure_connection(in, a);
            Rational s = Rational(in.cycles.front().symbols->size());
            if (lemma == Lemma::MeasureConnection) {
                c.lhs = w1;
                c.rhs = a * s;
            } else {
                std::size_t n1 = std::count(in.in_first.begin(), in.in_first.end(), 1);
                std::size_t n = in.in_first.size();
                c.lhs = w2;
                c.rhs = 2 * Rational(Integer(n1) * Integer(n - n1), Integer(n)) * a * s;
            }
            return detail::finish(c);
        }
        case Lemma::RewireCutBound: {
            auto g = ChainGraph::from_cycles(in.cycles);
            Rational phi = Rational(Integer(g.size()), Integer(4));
            if (phi < 1) return detail::skip(c, "family too small to partition");
            auto r = edge_rewiring_with_phi(g, in.k, phi);
            c.lhs = Rational(r.report.cut_after);
            c.rhs = r.report.cut_bound;
            return detail::finish(c);
        }
        case Lemma::App1: {
            TransformParams p{2, 1, 1, in.t, in.q};
            auto e1 = epsilon1(p, in.eps);
            Rational w = Rational(p.cluster_size());
            Rational big = Rational(1 + 2 * ipow(p.image_degree(), in.q));
            c.lhs = w * (e1 + big * (1 / (1 - w * e1) - 1));
            c.rhs = in.eps;
            return detail::finish(c);
        }
    }
    return c;
}

struct SuiteSummary {
    Lemma lemma = Lemma::FreqDiff;
    std::size_t pass = 0, fail = 0, skip = 0;
    std::vector<LemmaCheck> checks;  // index order
};

// Checks `count` instances of the lemma's family; work is split over threads, results keep index order.
inline SuiteSummary run_lemma(Lemma lemma, std::uint64_t seed, std::size_t count, unsigned threads = 0) {
    SuiteSummary s;
    s.lemma = lemma;
    s.checks.resize(count);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += threads)
                    s.checks[i] = check(lemma, make_instance(family_of(lemma), seed, i));
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (const auto& c : s.checks) {
        if (c.verdict == Verdict::Pass) ++s.pass;
        else if (c.verdict == Verdict::Fail) ++s.fail;
        else ++s.skip;
    }
    return s;
}

inline io::Json to_json(const LemmaCheck& c) {
    io::Json j{{"lemma", to_string(c.lemma)},
               {"index", c.instance.index},
               {"lhs", disckit::to_string(c.lhs)},
               {"rhs", disckit::to_string(c.rhs)},
               {"relation", to_string(c.relation)},
               {"verdict", to_string(c.verdict)}};
    if (!c.note.empty()) j["note"] = c.note;
    if (c.verdict == Verdict::Fail) j["instance"] = describe(c.instance);
    return j;
}

}  // namespace disckit::lemmas
