#pragma once

#include "freq.hpp"

namespace disckit {

// v_1 -> v_2 -> ... -> v_n with edges[i] labelling v_{i+1} -> v_{i+2}.
struct SPath {
    SymbolTable symbols;
    std::vector<Symbol> edges;

    std::size_t size() const { return edges.size() + 1; }

    SGraph graph() const {
        SGraph g(size(), symbols);
        for (Vertex i = 0; i < edges.size(); ++i) g.set(i, i + 1, edges[i]);
        return g;
    }
};

// v_1 -> ... -> v_n -> v_1; edges.back() is the closing symbol. n = 1 is a loop.
struct SCycle {
    SymbolTable symbols;
    std::vector<Symbol> edges;

    std::size_t size() const { return edges.size(); }

    SGraph graph() const {
        SGraph g(size(), symbols);
        for (Vertex i = 0; i < edges.size(); ++i) g.set(i, static_cast<Vertex>((i + 1) % size()), edges[i]);
        return g;
    }
};

inline SGraph undirected_path(std::size_t n) {
    SGraph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.connect_both(i, i + 1);
    return g;
}

struct UndirectedApprox {
    std::size_t size = 0;
    Rational distance;  // exact value for the path of `size` vertices against the input path
};

// Shorter undirected path whose k-disc frequencies are within eps of the path on n vertices.
inline UndirectedApprox approx_undirected(std::size_t n, std::uint32_t k, const Rational& eps) {
    if (n < 1 || k < 1) throw Error("approx_undirected needs n, k >= 1");
    if (eps <= 0) throw Error("approx_undirected needs eps > 0");
    Integer cap = floor(Rational(4 * k) / eps) + 1;
    std::size_t size = cap < Integer(n) ? static_cast<std::size_t>(cap) : n;
    Rational dist = 0;
    if (size != n) dist = Rational(4 * k) * (Rational(1, size) - Rational(1, n));
    if (size <= 2 * k && size != n) dist = freq_dist(undirected_path(size), undirected_path(n), k);
    return {size, dist};
}

inline SCycle close_cycle(const SPath& p, Symbol closing) {
    if (closing >= p.symbols->size()) throw Error("closing symbol out of range");
    SCycle c{p.symbols, p.edges};
    c.edges.push_back(closing);
    return c;
}

// m copies of the opened cycle joined by its closing symbol.
inline SCycle blowup(const SCycle& c, std::size_t m) {
    if (m < 1) throw Error("blowup factor must be >= 1");
    SCycle out{c.symbols, {}};
    out.edges.reserve(c.edges.size() * m);
    for (std::size_t i = 0; i < m; ++i) out.edges.insert(out.edges.end(), c.edges.begin(), c.edges.end());
    return out;
}

// Disjoint directed paths and cycles with in- and out-degree at most one.
class ChainGraph {
public:
    struct Step {
        Vertex to;
        Symbol symbol;
    };
    struct Component {
        std::vector<Vertex> order;  // starts at the path head, or at the least vertex of a cycle
        bool cycle = false;
    };

    ChainGraph() = default;
    ChainGraph(std::size_t n, SymbolTable symbols) : symbols_(std::move(symbols)), succ_(n), pred_(n) {}

    static ChainGraph from_cycles(const std::vector<SCycle>& cycles) {
        if (cycles.empty()) throw Error("empty cycle family");
        std::size_t n = 0;
        for (const auto& c : cycles) n += c.size();
        ChainGraph g(n, cycles.front().symbols);
        Vertex base = 0;
        for (const auto& c : cycles) {
            for (std::size_t i = 0; i < c.size(); ++i)
                g.link(base + i, base + static_cast<Vertex>((i + 1) % c.size()), c.edges[i]);
            base += static_cast<Vertex>(c.size());
        }
        return g;
    }
    static ChainGraph from_path(const SPath& p) {
        ChainGraph g(p.size(), p.symbols);
        for (Vertex i = 0; i < p.edges.size(); ++i) g.link(i, i + 1, p.edges[i]);
        return g;
    }

    std::size_t size() const { return succ_.size(); }
    const SymbolTable& symbols() const { return symbols_; }
    const std::optional<Step>& succ(Vertex v) const { return succ_.at(v); }
    const std::optional<Vertex>& pred(Vertex v) const { return pred_.at(v); }

    void link(Vertex u, Vertex v, Symbol s) {
        if (succ_.at(u) || pred_.at(v)) throw Error("chain graph: vertex already linked");
        succ_[u] = Step{v, s};
        pred_[v] = u;
    }
    void unlink(Vertex u) {
        if (!succ_.at(u)) return;
        pred_[succ_[u]->to].reset();
        succ_[u].reset();
    }

    SGraph graph() const {
        SGraph g(size(), symbols_);
        for (Vertex u = 0; u < size(); ++u)
            if (succ_[u]) g.set(u, succ_[u]->to, succ_[u]->symbol);
        return g;
    }

    std::vector<Component> components() const {
        std::vector<char> seen(size(), 0);
        std::vector<Component> out;
        for (Vertex v = 0; v < size(); ++v) {
            if (seen[v]) continue;
            Vertex head = v;
            bool cycle = false;
            while (pred_[head]) {
                head = *pred_[head];
                if (head == v) {
                    cycle = true;
                    break;
                }
            }
            Component c{{}, cycle};
            Vertex x = head;
            do {
                seen[x] = 1;
                c.order.push_back(x);
                if (!succ_[x]) break;
                x = succ_[x]->to;
            } while (x != head);
            if (cycle) std::rotate(c.order.begin(), std::min_element(c.order.begin(), c.order.end()), c.order.end());
            out.push_back(std::move(c));
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return *std::min_element(a.order.begin(), a.order.end()) < *std::min_element(b.order.begin(), b.order.end());
        });
        return out;
    }

    // Symbol sequence along a component (closing symbol last for a cycle).
    std::vector<Symbol> labels(const Component& c) const {
        std::vector<Symbol> out;
        for (std::size_t i = 0; i < c.order.size(); ++i) {
            if (!c.cycle && i + 1 == c.order.size()) break;
            out.push_back(succ_[c.order[i]]->symbol);
        }
        return out;
    }

    // Induced on `keep` (ascending vertex ids are renumbered 0..).
    ChainGraph induced(const std::vector<char>& keep) const {
        std::vector<Vertex> id(size(), 0);
        std::size_t n = 0;
        for (Vertex v = 0; v < size(); ++v)
            if (keep[v]) id[v] = static_cast<Vertex>(n++);
        ChainGraph h(n, symbols_);
        for (Vertex v = 0; v < size(); ++v)
            if (keep[v] && succ_[v] && keep[succ_[v]->to]) h.link(id[v], id[succ_[v]->to], succ_[v]->symbol);
        return h;
    }

    // Undirected distance is below `limit` (walks at most limit-1 steps each way).
    bool within(Vertex a, Vertex b, std::uint32_t limit) const {
        if (a == b) return limit > 0;
        Vertex x = a;
        for (std::uint32_t i = 1; i < limit && succ_[x]; ++i) {
            x = succ_[x]->to;
            if (x == b) return true;
        }
        x = a;
        for (std::uint32_t i = 1; i < limit && pred_[x]; ++i) {
            x = *pred_[x];
            if (x == b) return true;
        }
        return false;
    }

private:
    SymbolTable symbols_;
    std::vector<std::optional<Step>> succ_;
    std::vector<std::optional<Vertex>> pred_;
};

namespace detail {

// The disc as a single directed path, head first; nullopt otherwise.
inline std::optional<std::vector<Vertex>> as_directed_path(const SGraph& d) {
    std::optional<Vertex> head;
    for (Vertex v = 0; v < d.size(); ++v) {
        if (d.loop(v) || d.out(v).size() > 1 || d.in(v).size() > 1) return std::nullopt;
        if (d.in(v).empty()) {
            if (head) return std::nullopt;
            head = v;
        }
    }
    if (!head) return std::nullopt;
    std::vector<Vertex> order{*head};
    while (!d.out(order.back()).empty()) order.push_back(d.out(order.back()).front().first);
    if (order.size() != d.size()) return std::nullopt;
    return order;
}

}  // namespace detail

namespace mappings {

// Forward half of a path disc: the labels from the root to the path's end.
inline DiscMapping right_disc() {
    return {"right_disc", [](const Fingerprint&, const SGraph& d) -> std::optional<std::string> {
                auto order = detail::as_directed_path(d);
                if (!order) return std::nullopt;
                std::string key = "@";
                auto it = std::find(order->begin(), order->end(), Vertex{0});
                for (; it + 1 != order->end(); ++it) key += "->" + d.symbols()->name(*d.info(*it, *(it + 1)));
                return key;
            }};
}

// Concatenated edge labels of a path disc in path order.
inline DiscMapping k_string() {
    return {"k_string", [](const Fingerprint&, const SGraph& d) -> std::optional<std::string> {
                auto order = detail::as_directed_path(d);
                if (!order) return std::nullopt;
                std::string key;
                for (std::size_t i = 0; i + 1 < order->size(); ++i)
                    key += d.symbols()->name(*d.info((*order)[i], (*order)[i + 1]));
                return key;
            }};
}

}  // namespace mappings

}  // namespace disckit
