#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ppcs/graph.hpp"

namespace ppcs {

struct CorenessMap {
    std::vector<std::uint32_t> coreness;  // indexed by vertex id

    std::uint32_t operator[](VertexId v) const { return coreness[v]; }
    std::size_t size() const { return coreness.size(); }
};

// Coreness by bucket peeling (Batagelj-Zaversnik), O(n + m). Ties in the
// peel order resolve by ascending vertex id; the result is order-invariant.
template <typename View>
CorenessMap compute_coreness(const View& g) {
    const std::size_t n = g.num_vertices();
    CorenessMap out;
    out.coreness.assign(n, 0);
    if (n == 0) return out;

    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = static_cast<std::uint32_t>(g.degree(v));
        max_deg = std::max(max_deg, deg[v]);
    }

    // Counting sort of vertices by degree; stable, so equal degrees keep
    // ascending vertex order.
    std::vector<std::size_t> bin(max_deg + 2, 0);
    for (VertexId v = 0; v < n; ++v) ++bin[deg[v]];
    std::size_t start = 0;
    for (std::uint32_t d = 0; d <= max_deg; ++d) {
        std::size_t count = bin[d];
        bin[d] = start;
        start += count;
    }
    std::vector<VertexId> vert(n);
    std::vector<std::size_t> pos(n);
    for (VertexId v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (std::uint32_t d = max_deg + 1; d > 0; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    for (std::size_t i = 0; i < n; ++i) {
        VertexId v = vert[i];
        out.coreness[v] = deg[v];
        g.for_each_neighbor(v, [&](VertexId u) {
            if (deg[u] <= deg[v]) return;
            // Swap u with the first vertex of its degree bucket, then shrink.
            std::uint32_t du = deg[u];
            std::size_t pu = pos[u];
            std::size_t pw = bin[du];
            VertexId w = vert[pw];
            if (u != w) {
                std::swap(vert[pu], vert[pw]);
                pos[u] = pw;
                pos[w] = pu;
            }
            ++bin[du];
            --deg[u];
        });
    }
    return out;
}

// Maximal connected components, each sorted, ordered by smallest member id.
template <typename View>
std::vector<std::vector<VertexId>> connected_components(const View& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<VertexId>> components;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<VertexId> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            g.for_each_neighbor(v, [&](VertexId u) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

namespace detail {

// Peels the subgraph induced by `members` (sorted) until min degree >= k,
// then returns the component of q, all in global vertex ids.
// Materializes local adjacency; intended for small candidate sets.
template <typename View>
std::optional<std::vector<VertexId>> kcore_component_materialized(
    const View& g, const std::vector<VertexId>& members, VertexId q, std::uint32_t k) {
    const std::size_t m = members.size();
    auto local_of = [&](VertexId v) -> std::size_t {
        auto it = std::lower_bound(members.begin(), members.end(), v);
        if (it == members.end() || *it != v) return m;
        return static_cast<std::size_t>(it - members.begin());
    };

    std::vector<std::vector<std::uint32_t>> ladj(m);
    for (std::size_t i = 0; i < m; ++i) {
        g.for_each_neighbor(members[i], [&](VertexId u) {
            std::size_t j = local_of(u);
            if (j < m) ladj[i].push_back(static_cast<std::uint32_t>(j));
        });
    }

    std::vector<std::uint32_t> deg(m);
    std::vector<char> alive(m, 1);
    std::vector<std::uint32_t> queue;
    for (std::size_t i = 0; i < m; ++i) {
        deg[i] = static_cast<std::uint32_t>(ladj[i].size());
        if (deg[i] < k) {
            alive[i] = 0;
            queue.push_back(static_cast<std::uint32_t>(i));
        }
    }
    while (!queue.empty()) {
        std::uint32_t v = queue.back();
        queue.pop_back();
        for (std::uint32_t u : ladj[v]) {
            if (alive[u] && --deg[u] < k) {
                alive[u] = 0;
                queue.push_back(u);
            }
        }
    }

    std::size_t lq = local_of(q);
    if (lq == m || !alive[lq]) return std::nullopt;

    std::vector<char> seen(m, 0);
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(lq)};
    seen[lq] = 1;
    std::vector<VertexId> result;
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        result.push_back(members[v]);
        for (std::uint32_t u : ladj[v])
            if (alive[u] && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    std::sort(result.begin(), result.end());
    return result;
}

// Same peel over masked global adjacency; avoids materializing when the
// candidate set is a large slice of the graph.
template <typename View>
std::optional<std::vector<VertexId>> kcore_component_masked(
    const View& g, const std::vector<VertexId>& members, VertexId q, std::uint32_t k) {
    const std::size_t n = g.num_vertices();
    std::vector<char> in(n, 0);
    for (VertexId v : members) in[v] = 1;
    if (q >= n || !in[q]) return std::nullopt;

    std::vector<std::uint32_t> deg(n, 0);
    std::vector<VertexId> queue;
    for (VertexId v : members) {
        std::uint32_t d = 0;
        g.for_each_neighbor(v, [&](VertexId u) {
            if (in[u]) ++d;
        });
        deg[v] = d;
        if (d < k) queue.push_back(v);
    }
    for (VertexId v : queue) in[v] = 0;
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        g.for_each_neighbor(v, [&](VertexId u) {
            if (in[u] && --deg[u] < k) {
                in[u] = 0;
                queue.push_back(u);
            }
        });
    }

    if (!in[q]) return std::nullopt;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{q};
    seen[q] = 1;
    std::vector<VertexId> result;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        result.push_back(v);
        g.for_each_neighbor(v, [&](VertexId u) {
            if (in[u] && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
        });
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace detail

inline constexpr std::size_t kMaterializeLimit = 10000;

// Connected k-core containing q inside the subgraph induced by `members`.
// Absent when q gets peeled. `members` need not be sorted; q must belong.
template <typename View>
std::optional<std::vector<VertexId>> connected_kcore_containing(const View& g,
                                                                std::vector<VertexId> members,
                                                                VertexId q, std::uint32_t k) {
    detail::sort_unique(members);
    if (!detail::sorted_contains(members, q))
        throw ContractError("connected_kcore_containing: q not in member set");
    if (members.size() < kMaterializeLimit)
        return detail::kcore_component_materialized(g, members, q, k);
    return detail::kcore_component_masked(g, members, q, k);
}

// Vertices of the k-core of the whole view (all components).
template <typename View>
std::vector<VertexId> kcore_members(const View& g, std::uint32_t k) {
    const std::size_t n = g.num_vertices();
    std::vector<char> in(n, 1);
    std::vector<std::uint32_t> deg(n);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = static_cast<std::uint32_t>(g.degree(v));
        if (deg[v] < k) {
            in[v] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        g.for_each_neighbor(v, [&](VertexId u) {
            if (in[u] && --deg[u] < k) {
                in[u] = 0;
                queue.push_back(u);
            }
        });
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
        if (in[v]) out.push_back(v);
    return out;
}

}  // namespace ppcs
