// Acceptance suite: runs every release criterion at its pinned tolerance
// and prints one pass/fail line each. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ppcs/core.hpp"
#include "ppcs/coreness_tree.hpp"
#include "ppcs/eval.hpp"
#include "ppcs/io.hpp"
#include "ppcs/ppfp.hpp"
#include "ppcs/search.hpp"

using namespace ppcs;
using namespace ppcs::testing;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

struct Criterion {
    std::string name;
    std::vector<std::string> problems;
    std::string detail;
    Clock::time_point start = Clock::now();

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    void note(const std::string& text) { detail = text; }

    void finish(double budget_s = 0.0) {
        double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (budget_s > 0.0 && elapsed > budget_s)
            problems.push_back("exceeded time budget: " + std::to_string(elapsed) + "s > " +
                               std::to_string(budget_s) + "s");
        if (problems.empty()) {
            std::printf("PASS  %-28s (%.2fs%s%s)\n", name.c_str(), elapsed,
                        detail.empty() ? "" : ", ", detail.c_str());
        } else {
            ++g_failures;
            std::printf("FAIL  %-28s (%.2fs)\n", name.c_str(), elapsed);
            for (const auto& p : problems) std::printf("      - %s\n", p.c_str());
        }
        std::fflush(stdout);
    }
};

bool sound_result(const PPView& view, const CommunityResult& r, std::string* why) {
    if (r.empty()) return true;
    if (!detail::sorted_contains(r.members, r.query)) {
        *why = "query not a member";
        return false;
    }
    for (VertexId v : r.members) {
        std::size_t deg = 0;
        view.for_each_neighbor(v, [&](VertexId u) {
            if (detail::sorted_contains(r.members, u)) ++deg;
        });
        if (deg < r.k) {
            *why = "induced degree below k";
            return false;
        }
    }
    std::set<VertexId> mem(r.members.begin(), r.members.end());
    auto comp = oracle_kcore_component(view_adjacency(view), mem, r.query, 0);
    if (!comp || comp->size() != r.members.size()) {
        *why = "members not connected";
        return false;
    }
    if (common_attrs(view, r.members) != r.shared_attrs) {
        *why = "reported shared attrs differ from recomputation";
        return false;
    }
    return true;
}

std::vector<RandomInstance> seeded_instances(std::size_t count) {
    std::vector<RandomInstance> out;
    out.reserve(count);
    for (std::uint64_t seed = 1; seed <= count; ++seed) {
        RandomParams p;
        p.n = 12 + static_cast<std::uint32_t>(seed % 14);  // <= 25 vertices
        p.edge_prob = 0.28 + 0.01 * static_cast<double>(seed % 12);
        // keyword-style attribute cohesion: small pool, dense per-node sets
        p.attr_pool = 6;
        p.attrs_min = 4;
        p.attrs_max = 6;
        p.max_query_attrs = 6;
        p.private_edges = 2;
        p.private_attrs = 1;
        out.push_back(make_random_instance(seed, p));
    }
    return out;
}

// ---- criterion 1: running-example reproduction --------------------------

void criterion_running_example() {
    Criterion c("1 running-example");
    auto f = make_running_fixture();
    auto view = f.view();
    auto lists = extract_lists(view, f.q);
    auto tree = build_tree(lists, f.q);

    auto links = tree.node_links.find(f.v3);
    if (links == tree.node_links.end() || links->second.empty()) {
        c.expect(false, "v3 missing from the tree");
    } else {
        const auto& n = tree.nodes[static_cast<std::size_t>(links->second[0])];
        c.expect(n.prefix_attr_num == 1 && n.overall_attr_num == 3 &&
                     n.prefix_attrs == std::vector<AttrId>{f.c},
                 "P[v3]_1 != (1, 3, {c})");
    }

    auto cond = build_conditional(tree, view, f.v3);
    std::vector<std::pair<VertexId, std::uint32_t>> expect_counts{{f.v1, 3}, {f.v3, 3}};
    std::sort(expect_counts.begin(), expect_counts.end());
    c.expect(cond.counts == expect_counts, "conditional(v3) counts != {v1:3, v3:3}");
    bool v2_present = false;
    for (const auto& [u, w] : cond.counts) v2_present |= (u == f.v2);
    c.expect(!v2_present, "v2 not pruned from conditional(v3)");

    auto idx = build_coreness_tree(f.graph);
    auto r = ppfp_search(view, f.q, 2, idx);
    c.expect(!r.empty(), "ppfp_search returned empty");
    c.expect(r.shared_attrs == std::vector<AttrId>{f.b, f.c, f.d},
             "shared attrs != {b, c, d}");
    std::string why;
    c.expect(sound_result(view, r, &why), "unsound result: " + why);
    c.finish(1.0);
}

// ---- criterion 2: figure-1 reproduction ----------------------------------

void criterion_figure1() {
    Criterion c("2 figure-1");
    auto f = make_star_fixture();
    auto view = f.view_of(5);
    auto r = online_basic(view, f.v(5), 3);
    std::vector<VertexId> expect;
    for (ExternalId x = 5; x <= 9; ++x) expect.push_back(f.v(x));
    std::sort(expect.begin(), expect.end());
    c.expect(r.members == expect, "members != {v5..v9}");
    std::vector<std::string> names;
    for (AttrId a : r.shared_attrs) names.push_back(f.graph.attr_name(a));
    std::sort(names.begin(), names.end());
    c.expect(names == std::vector<std::string>{"CNN", "GAN"}, "shared attrs != {CNN, GAN}");
    c.finish(1.0);
}

// ---- criteria 3-5: exactness, dominance, soundness -----------------------

void criteria_differential(std::size_t instances) {
    Criterion c3("3 exactness-differential");
    Criterion c4("4 heuristic-dominance");
    Criterion c5("5 soundness-suite");
    auto insts = seeded_instances(instances);

    std::size_t mismatches = 0, dominance_violations = 0, soundness_violations = 0;
    double gain_sum = 0.0;
    std::size_t gain_n = 0;
    for (const auto& inst : insts) {
        auto view = inst.view();
        auto idx = build_coreness_tree(inst.graph);
        for (std::uint32_t k : {2u, 3u}) {
            auto oracle = oracle_acs_pp(view, inst.q, k);
            auto basic = online_basic(view, inst.q, k);
            auto binary = online_binary(view, inst.q, k);
            auto heur = ppfp_search(view, inst.q, k, idx);
            if (basic.shared_attrs.size() != oracle.best_shared) ++mismatches;
            if (binary.shared_attrs.size() != oracle.best_shared) ++mismatches;
            if (heur.shared_attrs.size() > basic.shared_attrs.size()) ++dominance_violations;
            if (!basic.empty()) {
                gain_sum += static_cast<double>(heur.shared_attrs.size()) /
                            static_cast<double>(basic.shared_attrs.size());
                ++gain_n;
            }
            std::string why;
            for (const auto* r : {&basic, &binary, &heur})
                if (!sound_result(view, *r, &why)) ++soundness_violations;
        }
    }
    c3.expect(mismatches == 0, std::to_string(mismatches) + " oracle mismatches");
    c3.note(std::to_string(2 * insts.size()) + " cells");
    c3.finish(60.0);

    double mean_gain = gain_n ? gain_sum / static_cast<double>(gain_n) : 0.0;
    c4.expect(dominance_violations == 0,
              std::to_string(dominance_violations) + " dominance violations");
    c4.expect(mean_gain >= 0.9,
              "mean attribute gain " + std::to_string(mean_gain) + " below 0.9");
    {
        std::ostringstream note;
        note << "mean gain " << mean_gain << " over " << gain_n << " cells";
        c4.note(note.str());
    }
    c4.finish();

    c5.expect(soundness_violations == 0,
              std::to_string(soundness_violations) + " soundness violations");
    c5.finish();
}

// ---- criterion 6: index correctness --------------------------------------

void criterion_index_correctness() {
    Criterion c("6 index-correctness");
    std::size_t expand_mismatches = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        RandomParams p;
        p.n = 20 + static_cast<std::uint32_t>((seed * 7) % 81);  // <= 100 vertices
        p.edge_prob = 0.05 + 0.002 * static_cast<double>(seed % 20);
        auto inst = make_random_instance(seed, p);
        const auto& g = inst.graph;
        auto idx = build_coreness_tree(g);
        auto coreness = compute_coreness(g);
        auto comps = connected_components(g);

        std::mt19937_64 rng(seed * 17);
        VertexId q = static_cast<VertexId>(rng() % g.num_vertices());
        std::vector<AttrId> required{static_cast<AttrId>(rng() % g.num_attrs()),
                                     static_cast<AttrId>(rng() % g.num_attrs())};
        detail::sort_unique(required);
        std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);

        std::vector<VertexId> expect;
        for (const auto& comp : comps) {
            if (!detail::sorted_contains(comp, q)) continue;
            for (VertexId v : comp) {
                if (v == q || coreness[v] < k) continue;
                bool all = true;
                for (AttrId a : required)
                    if (!g.has_attr(v, a)) all = false;
                if (all) expect.push_back(v);
            }
        }
        if (expand_candidates(idx, q, k, required) != expect) ++expand_mismatches;
    }
    c.expect(expand_mismatches == 0,
             std::to_string(expand_mismatches) + " expand_candidates mismatches");

    std::size_t coreness_mismatches = 0;
    for (std::uint64_t seed = 200; seed < 300; ++seed) {
        RandomParams p;
        p.n = 6 + static_cast<std::uint32_t>(seed % 25);  // <= 30 vertices
        p.edge_prob = 0.08 + 0.01 * static_cast<double>(seed % 20);
        auto inst = make_random_instance(seed, p);
        auto cm = compute_coreness(inst.graph);
        std::vector<std::vector<VertexId>> adj(inst.graph.num_vertices());
        for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) adj[v] = inst.graph.neighbors(v);
        auto ref = oracle_coreness(adj);
        for (VertexId v = 0; v < inst.graph.num_vertices(); ++v)
            if (cm[v] != ref[v]) ++coreness_mismatches;
    }
    c.expect(coreness_mismatches == 0,
             std::to_string(coreness_mismatches) + " coreness mismatches");
    c.finish(30.0);
}

// ---- criterion 7: efficiency trend ----------------------------------------

// Larger public-private instance: clustered public graph, query with >= 12
// attributes, neighbors sampling the query's attributes.
RandomInstance make_efficiency_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RandomInstance inst;
    auto& g = inst.graph;
    const std::uint32_t n = 2400;
    for (std::uint32_t i = 0; i < n; ++i) g.intern_vertex(i);

    std::vector<std::string> pool;
    for (int i = 0; i < 14; ++i) pool.push_back("t" + std::to_string(i));

    // ring of overlapping cliques keeps coreness >= 3 widespread
    const std::uint32_t clique = 6;
    for (std::uint32_t base = 0; base + clique <= n; base += clique - 1)
        for (std::uint32_t i = base; i < base + clique; ++i)
            for (std::uint32_t j = i + 1; j < base + clique; ++j) g.add_edge(i, j);
    // extra random edges
    for (std::uint32_t i = 0; i < n; ++i) {
        VertexId w = static_cast<VertexId>(rng() % n);
        if (w != i) g.add_edge(i, w);
    }

    VertexId q = 0;
    for (VertexId v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(q)) q = v;
    inst.q = q;

    // q holds every pool attribute; every other node holds each with p=0.55
    for (const auto& name : pool) g.add_attr(q, g.intern_attr(name));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (VertexId v = 0; v < n; ++v) {
        if (v == q) continue;
        for (const auto& name : pool)
            if (coin(rng) < 0.55) g.add_attr(v, g.intern_attr(name));
    }

    PrivateOverlay ov;
    ov.owner = q;
    for (std::uint32_t i = 0; i < 8; ++i) {
        VertexId w = static_cast<VertexId>(rng() % n);
        if (w != q && !g.has_edge(q, w)) ov.private_neighbors.push_back(w);
    }
    detail::sort_unique(ov.private_neighbors);
    inst.overlays.emplace(q, std::move(ov));
    return inst;
}

void criterion_efficiency() {
    Criterion c("7 efficiency-trend");
    std::vector<double> basic_ms, ppfp_ms;
    for (std::uint64_t seed = 1; seed <= 7; ++seed) {
        auto inst = make_efficiency_instance(seed);
        auto view = inst.view();
        if (view.attr_set(inst.q).size() < 12) {
            c.expect(false, "instance query has fewer than 12 attributes");
            continue;
        }
        auto idx = build_coreness_tree(inst.graph);
        auto heur = ppfp_search(view, inst.q, 3, idx);
        auto exact = online_basic(view, inst.q, 3);
        c.expect(heur.shared_attrs.size() <= exact.shared_attrs.size(),
                 "dominance violated on efficiency instance");
        ppfp_ms.push_back(heur.elapsed_ms);
        basic_ms.push_back(exact.elapsed_ms);
    }
    std::sort(basic_ms.begin(), basic_ms.end());
    std::sort(ppfp_ms.begin(), ppfp_ms.end());
    double med_basic = basic_ms[basic_ms.size() / 2];
    double med_ppfp = ppfp_ms[ppfp_ms.size() / 2];
    double ratio = med_basic > 0 ? med_ppfp / med_basic : 1.0;
    {
        std::ostringstream note;
        note << "median ppfp " << med_ppfp << " ms vs basic " << med_basic << " ms, ratio "
             << ratio;
        c.note(note.str());
    }
    c.expect(ratio <= 0.5, "ppfp/basic median ratio above 1/2");
    c.finish();
}

// ---- criterion 8: sensitivity trend ---------------------------------------

void criterion_sensitivity() {
    Criterion c("8 sensitivity-trend");
    AttributedPublicGraph g;
    std::mt19937_64 rng(4242);
    ExternalId next = 0;
    std::map<std::uint32_t, std::vector<VertexId>> buckets;
    const std::vector<std::uint32_t> attr_counts{2, 4, 8, 16};
    for (std::uint32_t nattrs : attr_counts) {
        for (int copy = 0; copy < 15; ++copy) {
            VertexId q = g.intern_vertex(next++);
            for (std::uint32_t a = 0; a < nattrs; ++a)
                g.add_attr(q, g.intern_attr("s" + std::to_string(nattrs) + "_" +
                                            std::to_string(copy) + "_" + std::to_string(a)));
            for (int i = 0; i < 24; ++i) {
                VertexId w = g.intern_vertex(next++);
                g.add_edge(q, w);
                for (AttrId a : g.attrs(q))
                    if (rng() % 2) g.add_attr(w, a);
            }
            buckets[nattrs].push_back(q);
        }
    }
    OverlayMap none;
    std::vector<double> bucket_mean;
    for (std::uint32_t nattrs : attr_counts) {
        auto rows = sensitivity_sweep(g, none, buckets[nattrs]);
        double sum = 0;
        for (const auto& r : rows) sum += static_cast<double>(r.tree_bytes);
        bucket_mean.push_back(sum / static_cast<double>(rows.size()));
    }
    for (std::size_t i = 1; i < bucket_mean.size(); ++i)
        c.expect(bucket_mean[i] >= bucket_mean[i - 1],
                 "bucket means not monotone nondecreasing");
    double size_ratio = bucket_mean.back() / bucket_mean.front();
    double attr_ratio = static_cast<double>(attr_counts.back()) /
                        static_cast<double>(attr_counts.front());
    c.expect(size_ratio <= 3.0 * attr_ratio && size_ratio >= attr_ratio / 3.0,
             "size ratio " + std::to_string(size_ratio) + " outside 3x of attr ratio " +
                 std::to_string(attr_ratio));
    {
        std::ostringstream note;
        note << "byte ratio " << size_ratio << " vs attr ratio " << attr_ratio;
        c.note(note.str());
    }
    c.finish(60.0);
}

// ---- criterion 9: synthesis invariants ------------------------------------

void criterion_synthesis() {
    Criterion c("9 synthesis-invariants");
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        RandomParams p;
        p.n = 60;
        p.edge_prob = 0.12;
        auto inst = make_random_instance(seed, p);
        std::vector<VertexId> queries;
        for (VertexId v = 0; v < inst.graph.num_vertices() && queries.size() < 10; ++v)
            if (inst.graph.degree(v) > 1) queries.push_back(v);
        SynthesisConfig cfg;
        cfg.seed = seed * 77;
        auto res = synthesize_overlays(inst.graph, queries, cfg);

        for (const auto& [owner, ov] : res.overlays) {
            c.expect(!detail::sorted_contains(ov.private_neighbors, owner),
                     "owner inside its own private neighbors");
            for (VertexId w : ov.private_neighbors)
                c.expect(!res.graph.has_edge(owner, w), "private edge still public");
            for (const auto& [v, attrs] : ov.private_attrs)
                for (AttrId a : attrs)
                    c.expect(!res.graph.has_attr(v, a), "private attr still public");
        }
        for (VertexId q : queries) {
            std::size_t priv = 0;
            auto it = res.overlays.find(q);
            if (it != res.overlays.end()) priv = it->second.private_neighbors.size();
            c.expect(res.graph.degree(q) + priv == inst.graph.degree(q),
                     "degree conservation violated");
        }

        auto res2 = synthesize_overlays(inst.graph, queries, cfg);
        std::ostringstream o1, o2;
        write_overlays(o1, res.graph, res.overlays);
        write_overlays(o2, res2.graph, res2.overlays);
        c.expect(o1.str() == o2.str(), "same seed produced different overlays");
    }
    c.finish();
}

}  // namespace

int main() {
    criterion_running_example();
    criterion_figure1();
    criteria_differential(200);
    criterion_index_correctness();
    criterion_efficiency();
    criterion_sensitivity();
    criterion_synthesis();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
