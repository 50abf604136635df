#pragma once

#include "enumerate.hpp"

#include <unordered_map>

namespace disckit {

enum class SearchStatus { Found, NotFoundUpTo, BudgetExhausted };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "Found";
        case SearchStatus::NotFoundUpTo: return "NotFoundUpTo";
        case SearchStatus::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

struct SearchResult {
    SearchStatus status = SearchStatus::NotFoundUpTo;
    std::optional<SGraph> witness;
    std::uint32_t searched_up_to = 0;
};

// Smallest enumerated graph whose set of k-disc classes is exactly `phi`.
inline SearchResult realizability_search(const std::set<Fingerprint>& phi, const EnumerationSpec& spec,
                                         std::uint32_t k, Budget budget = Budget::from_env()) {
    if (phi.empty()) throw Error("realizability search needs a nonempty disc set");
    SearchResult r;
    auto en = enumerate_graphs(spec, budget);
    for (const auto& g : en.graphs) {
        if (disc_set(g, k) == phi) {
            r.status = SearchStatus::Found;
            r.witness = g;
            r.searched_up_to = static_cast<std::uint32_t>(g.size());
            return r;
        }
    }
    r.status = en.complete ? SearchStatus::NotFoundUpTo : SearchStatus::BudgetExhausted;
    r.searched_up_to = en.reached_n;
    return r;
}

}  // namespace disckit
