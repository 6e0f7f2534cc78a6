#include "ppcs/search.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "ppcs/core.hpp"

namespace ppcs {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

CommunityResult make_result(const PPView& view, VertexId q, std::uint32_t k, Algo algo,
                            const std::optional<std::vector<VertexId>>& members,
                            Clock::time_point start) {
    CommunityResult r;
    r.query = q;
    r.k = k;
    r.algorithm = algo;
    if (members && !members->empty()) {
        r.members = *members;
        r.shared_attrs = common_attrs(view, r.members);
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

// Attribute-indexed vertex lists over the k-core of the view, for the two
// online algorithms.
struct AttrBuckets {
    std::vector<AttrId> query_attrs;
    std::vector<std::vector<VertexId>> lists;  // parallel to query_attrs, sorted
};

AttrBuckets collect_buckets(const PPView& view, const std::vector<AttrId>& query_attrs,
                            const std::vector<VertexId>& core) {
    AttrBuckets b;
    b.query_attrs = query_attrs;
    b.lists.resize(query_attrs.size());
    for (VertexId v : core) {
        auto inter = detail::sorted_intersect(view.attr_set(v), query_attrs);
        for (AttrId a : inter) {
            std::size_t pos = static_cast<std::size_t>(
                std::lower_bound(query_attrs.begin(), query_attrs.end(), a) - query_attrs.begin());
            b.lists[pos].push_back(v);
        }
    }
    return b;
}

// Intersection of the selected attribute lists, smallest first.
std::vector<VertexId> intersect_selected(const AttrBuckets& b, const std::vector<std::size_t>& sel) {
    std::vector<std::size_t> order = sel;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return b.lists[x].size() < b.lists[y].size();
    });
    std::vector<VertexId> acc = b.lists[order[0]];
    for (std::size_t i = 1; i < order.size() && !acc.empty(); ++i)
        acc = detail::sorted_intersect(acc, b.lists[order[i]]);
    return acc;
}

// Enumerates size-d index subsets in lexicographic order, invoking f until
// it returns true; returns whether any call succeeded.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t d, F&& f) {
    if (d > n || d == 0) return false;
    std::vector<std::size_t> sel(d);
    for (std::size_t i = 0; i < d; ++i) sel[i] = i;
    while (true) {
        if (f(sel)) return true;
        // advance
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (sel[i] != i + n - d) {
                ++sel[i];
                for (std::size_t j = i + 1; j < d; ++j) sel[j] = sel[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
    }
}

// One feasibility probe: does some size-d attribute subset admit a
// connected k-core containing q? Returns the first witness.
std::optional<std::vector<VertexId>> probe_size(const PPView& view, VertexId q, std::uint32_t k,
                                                const AttrBuckets& b, std::size_t d) {
    std::optional<std::vector<VertexId>> witness;
    for_each_subset(b.query_attrs.size(), d, [&](const std::vector<std::size_t>& sel) {
        auto cand = intersect_selected(b, sel);
        if (cand.size() < static_cast<std::size_t>(k) + 1) return false;
        if (!detail::sorted_contains(cand, q)) return false;
        auto h = connected_kcore_containing(view, std::move(cand), q, k);
        if (h) {
            witness = std::move(h);
            return true;
        }
        return false;
    });
    return witness;
}

}  // namespace

CommunityResult online_basic(const PPView& view, VertexId q, std::uint32_t k,
                             const SearchOptions& opts) {
    auto start = Clock::now();
    std::vector<AttrId> query_attrs = view.attr_set(q);
    if (query_attrs.empty()) return make_result(view, q, k, Algo::OnlineBasic, std::nullopt, start);

    std::vector<VertexId> core = kcore_members(view, k);
    if (!detail::sorted_contains(core, q))
        return make_result(view, q, k, Algo::OnlineBasic, std::nullopt, start);
    AttrBuckets buckets = collect_buckets(view, query_attrs, core);

    std::optional<std::vector<VertexId>> best;
    for (std::size_t d = 1; d <= query_attrs.size(); ++d) {
        bool found_at_d = false;
        for_each_subset(query_attrs.size(), d, [&](const std::vector<std::size_t>& sel) {
            auto cand = intersect_selected(buckets, sel);
            if (cand.size() < static_cast<std::size_t>(k) + 1) return false;
            if (!detail::sorted_contains(cand, q)) return false;
            auto h = connected_kcore_containing(view, std::move(cand), q, k);
            if (!h) return false;
            best = std::move(h);
            found_at_d = true;
            // Monotonicity makes further witnesses at this size redundant.
            return !opts.strict_paper_mode;
        });
        if (!found_at_d) break;
    }
    return make_result(view, q, k, Algo::OnlineBasic, best, start);
}

CommunityResult online_binary(const PPView& view, VertexId q, std::uint32_t k,
                              const SearchOptions&) {
    auto start = Clock::now();
    std::vector<AttrId> query_attrs = view.attr_set(q);
    if (query_attrs.empty())
        return make_result(view, q, k, Algo::OnlineBinary, std::nullopt, start);

    std::vector<VertexId> core = kcore_members(view, k);
    if (!detail::sorted_contains(core, q))
        return make_result(view, q, k, Algo::OnlineBinary, std::nullopt, start);
    AttrBuckets buckets = collect_buckets(view, query_attrs, core);

    // feasible(d) is monotone decreasing in d, so binary search from the
    // middle of [1, |attr'(q)|] finds the maximum feasible size.
    std::optional<std::vector<VertexId>> best;
    std::size_t lo = 1, hi = query_attrs.size();
    while (lo <= hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        auto witness = probe_size(view, q, k, buckets, mid);
        if (witness) {
            best = std::move(witness);
            lo = mid + 1;
        } else {
            if (mid == 1) break;
            hi = mid - 1;
        }
    }
    return make_result(view, q, k, Algo::OnlineBinary, best, start);
}

std::optional<CommunityResult> validate_candidate(const PPView& view, VertexId q, std::uint32_t k,
                                                  CandidateSet& cand,
                                                  const CorenessTree& public_idx) {
    cand.public_part.clear();
    if (!cand.claimed_attrs.empty())
        cand.public_part = expand_candidates(public_idx, q, k, cand.claimed_attrs);
    cand.merged = detail::sorted_union(cand.private_part, cand.public_part);

    if (cand.merged.size() + 1 < static_cast<std::size_t>(k) + 1) return std::nullopt;

    // Validation runs over the full view; members missing a claimed attribute
    // (the public index matches public attrs only) are dropped before peeling.
    std::vector<VertexId> candidates;
    candidates.reserve(cand.merged.size() + 1);
    for (VertexId v : cand.merged)
        if (v != q && view.has_all_attrs(v, cand.claimed_attrs)) candidates.push_back(v);
    candidates.push_back(q);

    if (candidates.size() < static_cast<std::size_t>(k) + 1) return std::nullopt;
    auto h = connected_kcore_containing(view, std::move(candidates), q, k);
    if (!h || h->empty()) return std::nullopt;

    CommunityResult r;
    r.query = q;
    r.k = k;
    r.algorithm = Algo::PPFP;
    r.members = std::move(*h);
    r.shared_attrs = common_attrs(view, r.members);
    return r;
}

namespace {

struct PPFPCandidateRef {
    std::int32_t node;
    std::uint32_t prefix;
    VertexId vertex;
};

void sort_candidates(std::vector<PPFPCandidateRef>& cands) {
    std::sort(cands.begin(), cands.end(), [](const PPFPCandidateRef& a, const PPFPCandidateRef& b) {
        if (a.prefix != b.prefix) return a.prefix > b.prefix;
        if (a.vertex != b.vertex) return a.vertex < b.vertex;
        return a.node < b.node;
    });
}

// One pass over the tree at level N: maximal-path candidates first, then
// conditional-tree candidates.
std::optional<CommunityResult> ppfp_level_pass(const PPView& view, VertexId q, std::uint32_t k,
                                               const CorenessTree& public_idx,
                                               const PPFPTree& tree, std::uint32_t n_level,
                                               const SearchOptions& opts) {
    // (a) deepest tree nodes whose whole prefix path shares >= N attributes
    std::vector<PPFPCandidateRef> path_cands;
    for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
        const auto& node = tree.nodes[i];
        if (node.prefix_attr_num < n_level) continue;
        bool has_deeper = false;
        for (const auto& [v, c] : node.children)
            if (tree.nodes[static_cast<std::size_t>(c)].prefix_attr_num >= n_level) {
                has_deeper = true;
                break;
            }
        if (!has_deeper)
            path_cands.push_back({static_cast<std::int32_t>(i), node.prefix_attr_num, node.vertex});
    }
    sort_candidates(path_cands);
    for (const auto& c : path_cands) {
        CandidateSet cand;
        cand.private_part = prefix_path(tree, c.node);
        std::sort(cand.private_part.begin(), cand.private_part.end());
        if (cand.private_part.size() < k) continue;
        cand.claimed_attrs = tree.nodes[static_cast<std::size_t>(c.node)].prefix_attrs;
        if (auto r = validate_candidate(view, q, k, cand, public_idx)) return r;
    }

    // (b) conditional trees for scattered attribute sets
    std::vector<PPFPCandidateRef> cond_cands;
    for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
        std::int32_t idx = static_cast<std::int32_t>(i);
        bool ok = opts.conditional_support_merged
                      ? eligible_for_conditional_merged(tree, idx, n_level, k)
                      : eligible_for_conditional(tree, idx, n_level, k);
        if (ok) cond_cands.push_back({idx, tree.nodes[i].prefix_attr_num, tree.nodes[i].vertex});
    }
    sort_candidates(cond_cands);
    std::unordered_set<VertexId> tried;
    for (const auto& c : cond_cands) {
        if (!tried.insert(c.vertex).second) continue;  // one conditional per vertex
        ConditionalTree cond = build_conditional(tree, view, c.vertex);
        if (cond.empty()) continue;
        CandidateSet cand;
        for (const auto& [u, weight] : cond.counts)
            if (weight >= n_level) cand.private_part.push_back(u);
        if (cand.private_part.size() < k) continue;
        cand.claimed_attrs = cond.cond_attrs;
        if (auto r = validate_candidate(view, q, k, cand, public_idx)) return r;
    }
    return std::nullopt;
}

}  // namespace

CommunityResult ppfp_search(const PPView& view, VertexId q, std::uint32_t k,
                            const CorenessTree& public_idx, const SearchOptions& opts) {
    auto start = Clock::now();
    ExtractedLists lists = extract_lists(view, q);
    PPFPTree tree = build_tree(lists, q);

    for (std::uint32_t n = tree.max_overall(); n > 1; --n) {
        if (auto r = ppfp_level_pass(view, q, k, public_idx, tree, n, opts)) {
            r->elapsed_ms = ms_since(start);
            return *r;
        }
    }

    if (opts.allow_plain_core) {
        if (tree.max_overall() >= 1) {
            if (auto r = ppfp_level_pass(view, q, k, public_idx, tree, 1, opts)) {
                r->elapsed_ms = ms_since(start);
                return *r;
            }
        }
        // Plain connected k-core containing q; shared attributes may be empty.
        std::vector<VertexId> core = kcore_members(view, k);
        if (detail::sorted_contains(core, q)) {
            auto h = connected_kcore_containing(view, std::move(core), q, k);
            return make_result(view, q, k, Algo::PPFP, h, start);
        }
    }

    return make_result(view, q, k, Algo::PPFP, std::nullopt, start);
}

CommunityResult run_algorithm(Algo algo, const PPView& view, VertexId q, std::uint32_t k,
                              const CorenessTree* public_idx, const SearchOptions& opts) {
    switch (algo) {
        case Algo::OnlineBasic: return online_basic(view, q, k, opts);
        case Algo::OnlineBinary: return online_binary(view, q, k, opts);
        case Algo::PPFP:
            if (!public_idx) throw ContractError("ppfp requires a coreness tree index");
            return ppfp_search(view, q, k, *public_idx, opts);
    }
    throw ContractError("unknown algorithm");
}

}  // namespace ppcs
