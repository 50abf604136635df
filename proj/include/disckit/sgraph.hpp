#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace disckit {

using Vertex = std::uint32_t;
using Symbol = std::uint16_t;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Ordered list of distinct symbol names. The order is the tie-break order everywhere.
class InformationSet {
public:
    InformationSet() = default;
    explicit InformationSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw Error("information set must be nonempty");
        if (names_.size() > std::numeric_limits<Symbol>::max()) throw Error("too many symbols");
        auto sorted = names_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("duplicate symbol in information set");
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(Symbol s) const { return names_.at(s); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<Symbol> find(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<Symbol>(i);
        return std::nullopt;
    }
    Symbol index(std::string_view name) const {
        auto s = find(name);
        if (!s) throw Error("unknown symbol: " + std::string(name));
        return *s;
    }

    friend bool operator==(const InformationSet&, const InformationSet&) = default;

private:
    std::vector<std::string> names_;
};

using SymbolTable = std::shared_ptr<const InformationSet>;

inline SymbolTable make_symbols(std::vector<std::string> names) {
    return std::make_shared<const InformationSet>(std::move(names));
}

// The single-symbol set used for label-free simple graphs.
inline SymbolTable simple_symbols() {
    static const SymbolTable table = make_symbols({"0"});
    return table;
}

struct Arc {
    Vertex from;
    Vertex to;
    Symbol symbol;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// S-graph: vertices 0..n-1 and a partial info function I(u,v) -> symbol.
class SGraph {
public:
    using Adjacency = std::vector<std::pair<Vertex, Symbol>>;

    SGraph() : symbols_(simple_symbols()) {}
    explicit SGraph(std::size_t n, SymbolTable symbols = simple_symbols())
        : symbols_(std::move(symbols)), out_(n), in_(n) {
        if (!symbols_) throw Error("null symbol table");
    }

    std::size_t size() const { return out_.size(); }
    const SymbolTable& symbols() const { return symbols_; }
    std::size_t symbol_count() const { return symbols_->size(); }

    Vertex add_vertex() {
        out_.emplace_back();
        in_.emplace_back();
        return static_cast<Vertex>(out_.size() - 1);
    }

    std::optional<Symbol> info(Vertex u, Vertex v) const {
        const auto& row = out_.at(u);
        auto it = lower(row, v);
        if (it != row.end() && it->first == v) return it->second;
        return std::nullopt;
    }

    void set(Vertex u, Vertex v, std::optional<Symbol> s) {
        check_vertex(u);
        check_vertex(v);
        if (s && *s >= symbols_->size()) throw Error("symbol index out of range");
        assign(out_[u], v, s);
        assign(in_[v], u, s);
    }
    void connect(Vertex u, Vertex v, Symbol s = 0) { set(u, v, s); }
    void connect_both(Vertex u, Vertex v, Symbol s = 0) {
        set(u, v, s);
        set(v, u, s);
    }

    const Adjacency& out(Vertex v) const { return out_.at(v); }
    const Adjacency& in(Vertex v) const { return in_.at(v); }

    std::optional<Symbol> loop(Vertex v) const { return info(v, v); }

    // Distinct u != v with I(u,v) or I(v,u) present, ascending.
    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out;
        out.reserve(out_[v].size() + in_[v].size());
        auto a = out_[v].begin(), ae = out_[v].end();
        auto b = in_[v].begin(), be = in_[v].end();
        while (a != ae || b != be) {
            Vertex next;
            if (b == be || (a != ae && a->first < b->first)) next = (a++)->first;
            else if (a == ae || b->first < a->first) next = (b++)->first;
            else { next = a->first; ++a; ++b; }
            if (next != v) out.push_back(next);
        }
        return out;
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size() + (loop(v) ? 2 : 0); }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (Vertex v = 0; v < size(); ++v) d = std::max(d, degree(v));
        return d;
    }

    std::size_t arc_count() const {
        std::size_t m = 0;
        for (const auto& row : out_) m += row.size();
        return m;
    }

    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        for (Vertex u = 0; u < size(); ++u)
            for (auto [v, s] : out_[u]) out.push_back({u, v, s});
        return out;
    }

    // Undirected BFS distances from src, capped at max_dist (farther vertices stay unreachable).
    std::vector<std::uint32_t> distances(Vertex src, std::uint32_t max_dist = kUnreachable) const {
        std::vector<std::uint32_t> dist(size(), kUnreachable);
        std::deque<Vertex> queue{src};
        dist.at(src) = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            if (dist[u] >= max_dist) continue;
            for (Vertex w : neighbors(u))
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }

    // Induced subgraph on `keep` (in the given order); vertex i of the result is keep[i].
    SGraph induced(std::span<const Vertex> keep) const {
        std::vector<std::uint32_t> pos(size(), kUnreachable);
        for (std::size_t i = 0; i < keep.size(); ++i) {
            if (pos.at(keep[i]) != kUnreachable) throw Error("duplicate vertex in induced()");
            pos[keep[i]] = static_cast<std::uint32_t>(i);
        }
        SGraph h(keep.size(), symbols_);
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (auto [v, s] : out_[keep[i]])
                if (pos[v] != kUnreachable) {
                    h.out_[i].emplace_back(pos[v], s);
                    h.in_[pos[v]].emplace_back(static_cast<Vertex>(i), s);
                }
        for (auto& row : h.out_) std::sort(row.begin(), row.end());
        for (auto& row : h.in_) std::sort(row.begin(), row.end());
        return h;
    }

    SGraph with_symbols(SymbolTable table) const {
        if (table->size() < symbols_->size()) throw Error("symbol table too small");
        SGraph h = *this;
        h.symbols_ = std::move(table);
        return h;
    }

    // Disjoint union; other's vertices are appended.
    void append(const SGraph& other) {
        if (*other.symbols_ != *symbols_) throw Error("append: symbol tables differ");
        Vertex base = static_cast<Vertex>(size());
        for (Vertex u = 0; u < other.size(); ++u) add_vertex();
        for (const auto& a : other.arcs()) set(base + a.from, base + a.to, a.symbol);
    }

    friend bool operator==(const SGraph& a, const SGraph& b) {
        return *a.symbols_ == *b.symbols_ && a.out_ == b.out_;
    }

private:
    static Adjacency::const_iterator lower(const Adjacency& row, Vertex v) {
        return std::lower_bound(row.begin(), row.end(), v,
                                [](const auto& p, Vertex x) { return p.first < x; });
    }
    static void assign(Adjacency& row, Vertex v, std::optional<Symbol> s) {
        auto it = std::lower_bound(row.begin(), row.end(), v,
                                   [](const auto& p, Vertex x) { return p.first < x; });
        bool present = it != row.end() && it->first == v;
        if (!s) {
            if (present) row.erase(it);
        } else if (present) {
            it->second = *s;
        } else {
            row.insert(it, {v, *s});
        }
    }
    void check_vertex(Vertex v) const {
        if (v >= size()) throw Error("vertex out of range");
    }

    SymbolTable symbols_;
    std::vector<Adjacency> out_;
    std::vector<Adjacency> in_;
};

// Symmetric, every pair carries symbol 0, no loops.
inline bool is_simple(const SGraph& g) {
    for (Vertex u = 0; u < g.size(); ++u)
        for (auto [v, s] : g.out(u)) {
            if (u == v || s != 0) return false;
            if (g.info(v, u) != std::optional<Symbol>(0)) return false;
        }
    return true;
}

// Label-free symmetric simple graph with loops dropped.
inline SGraph underlying(const SGraph& g) {
    SGraph h(g.size(), simple_symbols());
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v : g.neighbors(u)) h.set(u, v, Symbol{0});
    return h;
}

inline std::size_t edge_count_simple(const SGraph& g) { return g.arc_count() / 2; }

}  // namespace disckit
