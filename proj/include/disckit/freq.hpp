#pragma once

#include "disc.hpp"

#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace disckit {

using CountVector = std::map<Fingerprint, std::uint64_t>;
using FreqVector = std::map<Fingerprint, Rational>;   // zero entries omitted
using BucketVector = std::map<std::string, Rational>;  // freq after a disc mapping

namespace detail {

// Cheap non-canonical key of a BFS-ordered disc, used to memoize canonicalization.
inline std::string raw_key(const SGraph& d) {
    std::string s = std::to_string(d.size());
    for (const auto& a : d.arcs()) {
        s += ';';
        s += std::to_string(a.from);
        s += ',';
        s += std::to_string(a.to);
        s += ',';
        s += std::to_string(a.symbol);
    }
    return s;
}

}  // namespace detail

// Fingerprints of disc_k(g, v) for every v in `vertices`, memoized on the raw disc.
class DiscIndexer {
public:
    explicit DiscIndexer(std::uint32_t k) : k_(k) {}

    Fingerprint operator()(const SGraph& g, Vertex v) {
        auto d = disc(g, v, k_);
        auto key = detail::raw_key(d.graph);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        auto fp = fingerprint(d.graph, Vertex{0});
        memo_.emplace(std::move(key), fp);
        return fp;
    }

private:
    std::uint32_t k_;
    std::unordered_map<std::string, Fingerprint> memo_;
};

inline std::vector<Fingerprint> disc_fingerprints(const SGraph& g, std::uint32_t k) {
    DiscIndexer idx(k);
    std::vector<Fingerprint> out;
    out.reserve(g.size());
    for (Vertex v = 0; v < g.size(); ++v) out.push_back(idx(g, v));
    return out;
}

inline std::set<Fingerprint> disc_set(const SGraph& g, std::uint32_t k) {
    auto all = disc_fingerprints(g, k);
    return {all.begin(), all.end()};
}

inline CountVector count_relative(const SGraph& g, std::span<const Vertex> w, std::uint32_t k) {
    DiscIndexer idx(k);
    CountVector c;
    for (Vertex v : w) ++c[idx(g, v)];
    return c;
}

inline CountVector cnt(const SGraph& g, std::uint32_t k) {
    CountVector c;
    for (auto& fp : disc_fingerprints(g, k)) ++c[fp];
    return c;
}

inline FreqVector normalize(const CountVector& c, std::size_t total) {
    if (total == 0) throw Error("frequency of an empty vertex set");
    FreqVector f;
    for (const auto& [fp, n] : c) f.emplace(fp, Rational(Integer(n), Integer(total)));
    return f;
}

inline FreqVector freq(const SGraph& g, std::uint32_t k) { return normalize(cnt(g, k), g.size()); }

inline FreqVector freq_relative(const SGraph& g, std::span<const Vertex> w, std::uint32_t k) {
    return normalize(count_relative(g, w, k), w.size());
}

// L1 distance over the union of supports.
template <class Key>
Rational l1_dist(const std::map<Key, Rational>& a, const std::map<Key, Rational>& b) {
    Rational total = 0;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            total += abs(ia->second);
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            total += abs(ib->second);
            ++ib;
        } else {
            total += abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return total;
}

template <class Key>
Rational linf_dist(const std::map<Key, Rational>& a, const std::map<Key, Rational>& b) {
    Rational best = 0;
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        best = std::max(best, abs(v - (it == b.end() ? Rational(0) : it->second)));
    }
    for (const auto& [k, v] : b)
        if (!a.count(k)) best = std::max(best, abs(v));
    return best;
}

inline Rational freq_dist(const SGraph& a, const SGraph& b, std::uint32_t k) {
    return l1_dist(freq(a, k), freq(b, k));
}

template <class Key>
std::size_t support_union_size(const std::map<Key, Rational>& a, const std::map<Key, Rational>& b) {
    std::set<Key> keys;
    for (const auto& e : a) keys.insert(e.first);
    for (const auto& e : b) keys.insert(e.first);
    return keys.size();
}

// A function of the disc class. `canonical` is the disc decoded from the fingerprint.
struct DiscMapping {
    std::string name;
    std::function<std::optional<std::string>(const Fingerprint&, const SGraph& canonical)> apply;
};

inline BucketVector map_freq(const SGraph& g, std::uint32_t k, const DiscMapping& m) {
    BucketVector out;
    for (const auto& [fp, f] : freq(g, k)) {
        auto decoded = decode_fingerprint(fp, g.symbols());
        auto key = m.apply(fp, decoded.graph);
        if (!key) throw Error("mapping '" + m.name + "' undefined on a disc of the input");
        out[*key] += f;
    }
    return out;
}

namespace mappings {

inline DiscMapping identity() {
    return {"identity", [](const Fingerprint& fp, const SGraph&) { return std::optional(fp.str()); }};
}

inline DiscMapping constant() {
    return {"constant", [](const Fingerprint&, const SGraph&) { return std::optional<std::string>("*"); }};
}

inline DiscMapping underlying() {
    return {"underlying", [](const Fingerprint&, const SGraph& d) {
                return std::optional(fingerprint(disckit::underlying(d), Vertex{0}).str());
            }};
}

// FNV-1a of the fingerprint, reduced mod `buckets`.
inline DiscMapping hash_bucket(std::uint32_t buckets) {
    if (buckets == 0) throw Error("hash_bucket needs at least one bucket");
    return {"hash" + std::to_string(buckets), [buckets](const Fingerprint& fp, const SGraph&) {
                std::uint64_t h = 1469598103934665603ull;
                for (unsigned char c : fp.str()) h = (h ^ c) * 1099511628211ull;
                return std::optional(std::to_string(h % buckets));
            }};
}

}  // namespace mappings

// Vertex partition helpers.
inline std::size_t cut(const SGraph& g, std::span<const Vertex> v1) {
    std::vector<char> in1(g.size(), 0);
    for (Vertex v : v1) in1.at(v) = 1;
    std::size_t c = 0;
    for (const auto& a : g.arcs())
        if (a.from != a.to && in1[a.from] != in1[a.to]) ++c;
    return c;
}

inline Rational alpha(const SGraph& g, std::span<const Vertex> v1, std::span<const Vertex> v2, std::uint32_t k) {
    return linf_dist(freq_relative(g, v1, k), freq_relative(g, v2, k));
}

}  // namespace disckit
