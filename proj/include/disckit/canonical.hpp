#pragma once

#include "sgraph.hpp"

#include <array>
#include <charconv>
#include <compare>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace disckit {

// Versioned canonical encoding. "D1r" = rooted (root is vertex 0), "D1u" = unrooted.
class Fingerprint {
public:
    Fingerprint() = default;
    explicit Fingerprint(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& str() const { return bytes_; }
    bool empty() const { return bytes_.empty(); }
    bool rooted() const { return bytes_.rfind("D1r|", 0) == 0; }

    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

private:
    std::string bytes_;
};

struct CanonicalForm {
    Fingerprint fingerprint;
    std::vector<Vertex> order;  // order[i] = input vertex placed at canonical position i
};

namespace detail {

class Canonicalizer {
public:
    Canonicalizer(const SGraph& g, std::optional<Vertex> root) : g_(g), n_(g.size()) {
        const std::uint32_t base = static_cast<std::uint32_t>(g.symbol_count()) + 1;
        adj_.resize(n_);
        self_.assign(n_, 0);
        for (Vertex v = 0; v < n_; ++v) {
            if (auto l = g.loop(v)) self_[v] = *l + 1u;
            for (Vertex u : g.neighbors(v)) {
                auto a = g.info(v, u), b = g.info(u, v);
                std::uint32_t code = (a ? *a + 1u : 0u) * base + (b ? *b + 1u : 0u);
                adj_[v].emplace_back(u, code);
            }
        }
        std::vector<std::uint32_t> dist(n_, 0);
        if (root) dist = g.distances(*root);
        using Key = std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>;
        std::vector<Key> keys(n_);
        for (Vertex v = 0; v < n_; ++v) {
            std::vector<std::uint32_t> codes;
            for (auto [u, c] : adj_[v]) codes.push_back(c);
            std::sort(codes.begin(), codes.end());
            keys[v] = Key{dist[v], self_[v], std::move(codes)};
        }
        initial_ = rank(keys);
    }

    CanonicalForm run(bool rooted) {
        search(initial_);
        std::string s = rooted ? "D1r|" : "D1u|";
        s += std::to_string(n_);
        s += '|';
        for (std::size_t i = 0; i < best_.size(); i += 3) {
            if (i) s += ',';
            s += std::to_string(best_[i]);
            s += '>';
            s += std::to_string(best_[i + 1]);
            s += ':';
            s += std::to_string(best_[i + 2]);
        }
        return {Fingerprint(std::move(s)), best_order_};
    }

private:
    template <class Key>
    static std::vector<std::uint32_t> rank(const std::vector<Key>& keys) {
        std::vector<std::uint32_t> idx(keys.size());
        std::iota(idx.begin(), idx.end(), 0u);
        std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
        std::vector<std::uint32_t> out(keys.size());
        std::uint32_t r = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i > 0 && keys[idx[i - 1]] < keys[idx[i]]) ++r;
            out[idx[i]] = r;
        }
        return out;
    }

    static std::size_t count_colors(const std::vector<std::uint32_t>& c) {
        std::uint32_t mx = 0;
        for (auto x : c) mx = std::max(mx, x);
        return c.empty() ? 0 : mx + 1;
    }

    void refine(std::vector<std::uint32_t>& colors) const {
        std::size_t count = count_colors(colors);
        using Key = std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>>;
        std::vector<Key> keys(n_);
        while (count < n_) {
            for (Vertex v = 0; v < n_; ++v) {
                keys[v].first = colors[v];
                auto& sig = keys[v].second;
                sig.clear();
                for (auto [u, c] : adj_[v]) sig.emplace_back(colors[u], c);
                std::sort(sig.begin(), sig.end());
            }
            auto next = rank(keys);
            std::size_t next_count = count_colors(next);
            colors = std::move(next);
            if (next_count == count) break;
            count = next_count;
        }
    }

    void search(std::vector<std::uint32_t> colors) {
        refine(colors);
        std::size_t ncolors = count_colors(colors);
        if (ncolors == n_) {
            leaf(colors);
            return;
        }
        std::vector<std::uint32_t> cell_size(ncolors, 0);
        for (auto c : colors) ++cell_size[c];
        std::uint32_t target = 0;
        while (cell_size[target] < 2) ++target;
        for (Vertex x = 0; x < n_; ++x) {
            if (colors[x] != target) continue;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> keys(n_);
            for (Vertex v = 0; v < n_; ++v)
                keys[v] = {colors[v], (colors[v] == target && v != x) ? 1u : 0u};
            search(rank(keys));
        }
    }

    void leaf(const std::vector<std::uint32_t>& pos) {
        std::vector<std::array<std::uint32_t, 3>> arcs;
        arcs.reserve(g_.arc_count());
        for (Vertex u = 0; u < n_; ++u)
            for (auto [v, s] : g_.out(u)) arcs.push_back({pos[u], pos[v], s});
        std::sort(arcs.begin(), arcs.end());
        std::vector<std::uint32_t> form;
        form.reserve(arcs.size() * 3);
        for (const auto& a : arcs) form.insert(form.end(), a.begin(), a.end());
        if (!have_best_ || form < best_) {
            best_ = std::move(form);
            have_best_ = true;
            best_order_.assign(n_, 0);
            for (Vertex v = 0; v < n_; ++v) best_order_[pos[v]] = v;
        }
    }

    const SGraph& g_;
    std::size_t n_;
    std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> adj_;
    std::vector<std::uint32_t> self_;
    std::vector<std::uint32_t> initial_;
    std::vector<std::uint32_t> best_;
    std::vector<Vertex> best_order_;
    bool have_best_ = false;
};

}  // namespace detail

// Root-fixed canonical form when `root` is set; otherwise the unrooted form.
inline CanonicalForm canonical_form(const SGraph& g, std::optional<Vertex> root = std::nullopt) {
    if (root && *root >= g.size()) throw Error("root out of range");
    detail::Canonicalizer c(g, root);
    return c.run(root.has_value());
}

inline Fingerprint fingerprint(const SGraph& g, std::optional<Vertex> root = std::nullopt) {
    return canonical_form(g, root).fingerprint;
}

struct DecodedFingerprint {
    SGraph graph;
    bool rooted = false;  // root is vertex 0 when set
};

inline DecodedFingerprint decode_fingerprint(const Fingerprint& fp, SymbolTable symbols) {
    std::string_view s = fp.str();
    bool rooted;
    if (s.rfind("D1r|", 0) == 0) rooted = true;
    else if (s.rfind("D1u|", 0) == 0) rooted = false;
    else throw Error("unknown fingerprint format");
    s.remove_prefix(4);
    auto bar = s.find('|');
    if (bar == std::string_view::npos) throw Error("malformed fingerprint");
    auto num = [&](std::string_view t) {
        std::uint32_t v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size()) throw Error("malformed fingerprint");
        return v;
    };
    std::uint32_t n = num(s.substr(0, bar));
    SGraph g(n, std::move(symbols));
    s.remove_prefix(bar + 1);
    while (!s.empty()) {
        auto comma = s.find(',');
        auto item = s.substr(0, comma);
        auto gt = item.find('>'), colon = item.find(':');
        if (gt == std::string_view::npos || colon == std::string_view::npos) throw Error("malformed fingerprint");
        g.set(num(item.substr(0, gt)), num(item.substr(gt + 1, colon - gt - 1)),
              static_cast<Symbol>(num(item.substr(colon + 1))));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return {std::move(g), rooted};
}

}  // namespace disckit

template <>
struct std::hash<disckit::Fingerprint> {
    std::size_t operator()(const disckit::Fingerprint& f) const noexcept {
        return std::hash<std::string>{}(f.str());
    }
};
