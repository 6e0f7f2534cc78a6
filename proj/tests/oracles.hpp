#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ppcs/graph.hpp"

// Brute-force reference implementations, kept independent of the library's
// algorithm code: plain repeated-scan peeling and full subset enumeration.

namespace ppcs::testing {

// Adjacency snapshot of a view, for oracle use.
inline std::vector<std::vector<VertexId>> view_adjacency(const PPView& view) {
    std::vector<std::vector<VertexId>> adj(view.num_vertices());
    for (VertexId v = 0; v < view.num_vertices(); ++v) adj[v] = view.neighbor_set(v);
    return adj;
}

// Repeatedly deletes vertices of degree < k within `alive` until stable.
inline std::set<VertexId> oracle_peel(const std::vector<std::vector<VertexId>>& adj,
                                      std::set<VertexId> alive, std::uint32_t k) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = alive.begin(); it != alive.end();) {
            std::size_t deg = 0;
            for (VertexId u : adj[*it])
                if (alive.count(u)) ++deg;
            if (deg < k) {
                it = alive.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    return alive;
}

inline std::optional<std::set<VertexId>> oracle_kcore_component(
    const std::vector<std::vector<VertexId>>& adj, const std::set<VertexId>& members, VertexId q,
    std::uint32_t k) {
    std::set<VertexId> alive = oracle_peel(adj, members, k);
    if (!alive.count(q)) return std::nullopt;
    std::set<VertexId> comp;
    std::vector<VertexId> stack{q};
    comp.insert(q);
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : adj[v])
            if (alive.count(u) && !comp.count(u)) {
                comp.insert(u);
                stack.push_back(u);
            }
    }
    return comp;
}

// coreness(v) = max k such that v survives iterated deletion of degree < k
// vertices, probing every k from zero upward.
inline std::vector<std::uint32_t> oracle_coreness(const std::vector<std::vector<VertexId>>& adj) {
    std::size_t n = adj.size();
    std::vector<std::uint32_t> core(n, 0);
    std::set<VertexId> all;
    for (VertexId v = 0; v < n; ++v) all.insert(v);
    for (std::uint32_t k = 0;; ++k) {
        std::set<VertexId> alive = oracle_peel(adj, all, k);
        if (alive.empty()) break;
        for (VertexId v : alive) core[v] = k;
        if (k > n) break;
    }
    return core;
}

// Exhaustive ACS-PP optimum: the largest attribute-subset size over all
// subsets of attr'(q) admitting a connected k-core containing q, together
// with one witness member set.
struct OracleAnswer {
    std::uint32_t best_shared = 0;
    std::set<VertexId> witness;
};

inline OracleAnswer oracle_acs_pp(const PPView& view, VertexId q, std::uint32_t k) {
    OracleAnswer ans;
    auto adj = view_adjacency(view);
    std::vector<AttrId> qattrs = view.attr_set(q);
    std::size_t na = qattrs.size();
    for (std::uint64_t mask = 1; mask < (1ULL << na); ++mask) {
        std::uint32_t size = 0;
        std::vector<AttrId> subset;
        for (std::size_t i = 0; i < na; ++i)
            if (mask & (1ULL << i)) {
                subset.push_back(qattrs[i]);
                ++size;
            }
        if (size <= ans.best_shared) continue;
        std::set<VertexId> holders;
        for (VertexId v = 0; v < view.num_vertices(); ++v)
            if (view.has_all_attrs(v, subset)) holders.insert(v);
        if (!holders.count(q) || holders.size() < k + 1) continue;
        auto comp = oracle_kcore_component(adj, holders, q, k);
        if (comp) {
            ans.best_shared = size;
            ans.witness = *comp;
        }
    }
    return ans;
}

}  // namespace ppcs::testing
