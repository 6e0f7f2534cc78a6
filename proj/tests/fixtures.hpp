#pragma once

#include <random>
#include <sstream>
#include <string>

#include "ppcs/graph.hpp"
#include "ppcs/io.hpp"

namespace ppcs::testing {

inline AttributedPublicGraph graph_from(const std::string& edges, const std::string& attrs) {
    std::istringstream e(edges), a(attrs);
    return load_public_graph(e, a);
}

inline OverlayMap overlays_from(const std::string& text, AttributedPublicGraph& g) {
    std::istringstream in(text);
    return load_private_overlays(in, g);
}

// Running example used throughout the index and search tests. The query's
// neighborhood is {v1, v2, v3} with q--v3 private; v3 sees {b, c} publicly
// and gains d inside q's view. v4 joins from the public side only.
struct RunningFixture {
    AttributedPublicGraph graph;
    OverlayMap overlays;
    VertexId q, v1, v2, v3, v4;
    AttrId a, b, c, d, e;

    PPView view() const { return pp_view(graph, overlays, q); }
};

inline RunningFixture make_running_fixture() {
    RunningFixture f;
    f.graph = graph_from(
        "0 1\n"
        "0 2\n"
        "1 3\n"
        "1 4\n"
        "3 4\n",
        "0\ta,b,c,d,e\n"
        "1\tb,c,d,e\n"
        "2\ta,c,e\n"
        "3\tb,c\n"
        "4\tb,c,d\n");
    f.overlays = overlays_from(
        "P 0 3\n"
        "A 0 3 d\n",
        f.graph);
    f.q = f.graph.require_vertex(0);
    f.v1 = f.graph.require_vertex(1);
    f.v2 = f.graph.require_vertex(2);
    f.v3 = f.graph.require_vertex(3);
    f.v4 = f.graph.require_vertex(4);
    f.a = *f.graph.find_attr("a");
    f.b = *f.graph.find_attr("b");
    f.c = *f.graph.find_attr("c");
    f.d = *f.graph.find_attr("d");
    f.e = *f.graph.find_attr("e");
    return f;
}

// Public-private graph with two private star-graphs (owners v3 and v5).
// For q = v5, k = 3 the answer is {v5..v9} sharing {CNN, GAN}; v8's GAN and
// two of the core edges exist only in v5's view.
struct StarFixture {
    AttributedPublicGraph graph;
    OverlayMap overlays;

    VertexId v(ExternalId ext) const { return graph.require_vertex(ext); }
    PPView view_of(ExternalId ext) const { return pp_view(graph, overlays, v(ext)); }
};

inline StarFixture make_star_fixture() {
    StarFixture f;
    f.graph = graph_from(
        "1 2\n1 3\n2 3\n3 4\n4 5\n5 6\n5 7\n6 7\n6 8\n7 9\n8 9\n",
        "1\tCNN,DL\n"
        "2\tCNN,DL\n"
        "3\tCNN\n"
        "4\tCNN\n"
        "5\tCNN,ML\n"
        "6\tCNN,GAN\n"
        "7\tCNN,GAN\n"
        "8\tCNN\n"
        "9\tCNN,GAN\n");
    f.overlays = overlays_from(
        "P 5 8\n"
        "P 5 9\n"
        "A 5 5 GAN\n"
        "A 5 8 GAN\n"
        "P 3 7\n"
        "A 3 7 RNN\n",
        f.graph);
    return f;
}

// Three-component public graph: a tree hanging off a chorded 4-cycle, a
// triangle, and an isolated vertex. Coreness: v1..v5 -> 1, v6..v9 -> 2,
// v10..v12 -> 2, v13 -> 0.
struct ComponentsFixture {
    AttributedPublicGraph graph;

    VertexId v(ExternalId ext) const { return graph.require_vertex(ext); }
};

inline ComponentsFixture make_components_fixture() {
    ComponentsFixture f;
    f.graph = graph_from(
        "1 6\n2 1\n3 1\n4 2\n5 2\n"
        "6 7\n7 8\n8 9\n9 6\n6 8\n"
        "10 11\n11 12\n12 10\n",
        "1\tx\n2\tx,y\n3\ty\n4\tx\n5\ty\n"
        "6\tx,y\n7\tx\n8\ty\n9\tx,y\n"
        "10\tx\n11\tx\n12\tx,y\n"
        "13\tz\n");
    return f;
}

struct RandomParams {
    std::uint32_t n = 20;
    double edge_prob = 0.3;
    std::uint32_t attr_pool = 8;
    std::uint32_t attrs_min = 2;
    std::uint32_t attrs_max = 5;
    std::uint32_t max_query_attrs = 6;
    std::uint32_t private_edges = 2;   // added to q, non-neighbors only
    std::uint32_t private_attrs = 1;   // pool attrs added privately to q's view
};

struct RandomInstance {
    AttributedPublicGraph graph;
    OverlayMap overlays;
    VertexId q = kNoVertex;

    PPView view() const { return pp_view(graph, overlays, q); }
};

// Seeded public-private instance; attribute sets overlap heavily so that
// multi-attribute communities are common.
inline RandomInstance make_random_instance(std::uint64_t seed, const RandomParams& p = {}) {
    std::mt19937_64 rng(seed);
    RandomInstance inst;
    auto& g = inst.graph;
    for (std::uint32_t i = 0; i < p.n; ++i) g.intern_vertex(i);
    std::vector<std::string> pool;
    for (std::uint32_t i = 0; i < p.attr_pool; ++i) pool.push_back("a" + std::to_string(i));

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::uint32_t u = 0; u < p.n; ++u)
        for (std::uint32_t v = u + 1; v < p.n; ++v)
            if (coin(rng) < p.edge_prob) g.add_edge(u, v);

    std::uniform_int_distribution<std::uint32_t> nattr(p.attrs_min, p.attrs_max);
    for (std::uint32_t v = 0; v < p.n; ++v) {
        std::vector<std::uint32_t> idx(p.attr_pool);
        for (std::uint32_t i = 0; i < p.attr_pool; ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        std::uint32_t cnt = std::min(nattr(rng), p.attr_pool);
        for (std::uint32_t i = 0; i < cnt; ++i) g.add_attr(v, g.intern_attr(pool[idx[i]]));
    }

    // Query: a vertex of maximal degree, for a meaningful neighborhood.
    VertexId q = 0;
    for (VertexId v = 1; v < p.n; ++v)
        if (g.degree(v) > g.degree(q)) q = v;
    inst.q = q;

    // Cap |attr'(q)|.
    while (g.attrs(q).size() > p.max_query_attrs) g.remove_attr(q, g.attrs(q).back());

    PrivateOverlay ov;
    ov.owner = q;
    std::vector<VertexId> nonneighbors;
    for (VertexId v = 0; v < p.n; ++v)
        if (v != q && !g.has_edge(q, v)) nonneighbors.push_back(v);
    std::shuffle(nonneighbors.begin(), nonneighbors.end(), rng);
    for (std::uint32_t i = 0; i < p.private_edges && i < nonneighbors.size(); ++i)
        ov.private_neighbors.push_back(nonneighbors[i]);
    detail::sort_unique(ov.private_neighbors);

    // Private attribute additions on q itself, drawn from pool attributes q
    // does not hold publicly, within the query-attribute cap.
    std::uint32_t budget = p.max_query_attrs > g.attrs(q).size()
                               ? p.max_query_attrs - static_cast<std::uint32_t>(g.attrs(q).size())
                               : 0;
    std::uint32_t want = std::min(p.private_attrs, budget);
    if (want > 0) {
        std::vector<std::string> candidates;
        for (const auto& name : pool) {
            auto id = g.find_attr(name);
            if (!id || !g.has_attr(q, *id)) candidates.push_back(name);
        }
        std::shuffle(candidates.begin(), candidates.end(), rng);
        auto& priv = ov.private_attrs[q];
        for (std::uint32_t i = 0; i < want && i < candidates.size(); ++i)
            priv.push_back(g.intern_attr(candidates[i]));
        detail::sort_unique(priv);
        if (priv.empty()) ov.private_attrs.erase(q);
    }

    if (!ov.private_neighbors.empty() || !ov.private_attrs.empty())
        inst.overlays.emplace(q, std::move(ov));
    return inst;
}

}  // namespace ppcs::testing
