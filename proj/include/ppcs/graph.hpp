#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ppcs/errors.hpp"

namespace ppcs {

// Dense internal ids. External (file) vertex ids are arbitrary non-negative
// integers and are remapped at load time; attribute strings are interned.
using VertexId = std::uint32_t;
using AttrId = std::uint32_t;
using ExternalId = std::uint64_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

namespace detail {

// Sorted-unique vector used as a set; intersections are linear merges.
template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename T>
bool sorted_contains(const std::vector<T>& v, T x) {
    return std::binary_search(v.begin(), v.end(), x);
}

template <typename T>
std::vector<T> sorted_intersect(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <typename T>
std::vector<T> sorted_union(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// a \subseteq b for sorted-unique vectors.
template <typename T>
bool sorted_subset(const std::vector<T>& a, const std::vector<T>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

// Undirected simple public graph with per-node attribute sets. Immutable
// after load; safe for concurrent shared reads.
class AttributedPublicGraph {
public:
    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    std::size_t num_attrs() const { return attr_names_.size(); }

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    std::size_t degree(VertexId v) const { return adj_[v].size(); }
    const std::vector<AttrId>& attrs(VertexId v) const { return attrs_[v]; }

    template <typename F>
    void for_each_neighbor(VertexId v, F&& f) const {
        for (VertexId u : adj_[v]) f(u);
    }

    bool has_edge(VertexId u, VertexId v) const {
        return detail::sorted_contains(adj_[u], v);
    }
    bool has_attr(VertexId v, AttrId a) const {
        return detail::sorted_contains(attrs_[v], a);
    }

    ExternalId external_id(VertexId v) const { return external_ids_[v]; }
    std::optional<VertexId> find_vertex(ExternalId ext) const {
        auto it = vertex_ids_.find(ext);
        if (it == vertex_ids_.end()) return std::nullopt;
        return it->second;
    }
    VertexId require_vertex(ExternalId ext) const {
        auto v = find_vertex(ext);
        if (!v) throw NotFoundError("unknown vertex id " + std::to_string(ext));
        return *v;
    }

    const std::string& attr_name(AttrId a) const { return attr_names_[a]; }
    std::optional<AttrId> find_attr(const std::string& name) const {
        auto it = attr_ids_.find(name);
        if (it == attr_ids_.end()) return std::nullopt;
        return it->second;
    }

    // Builder interface, used by the loaders and the overlay synthesizer.
    VertexId intern_vertex(ExternalId ext);
    AttrId intern_attr(const std::string& name);
    // Inserts the undirected edge {u, v}. Duplicates are ignored, self-loops
    // rejected. Returns true if the edge was new.
    bool add_edge(VertexId u, VertexId v);
    bool remove_edge(VertexId u, VertexId v);
    void add_attr(VertexId v, AttrId a);
    bool remove_attr(VertexId v, AttrId a);
    // Restores sorted adjacency/attribute invariants after bulk insertion.
    void finalize();

private:
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::vector<AttrId>> attrs_;
    std::vector<ExternalId> external_ids_;
    std::unordered_map<ExternalId, VertexId> vertex_ids_;
    std::vector<std::string> attr_names_;
    std::unordered_map<std::string, AttrId> attr_ids_;
    std::size_t num_edges_ = 0;
};

// One owner's private star-graph: hidden neighbors plus private attribute
// additions, visible only inside the owner's view (Def. 1 semantics).
struct PrivateOverlay {
    VertexId owner = kNoVertex;
    std::vector<VertexId> private_neighbors;              // sorted
    std::map<VertexId, std::vector<AttrId>> private_attrs;  // values sorted

    const std::vector<AttrId>* attrs_of(VertexId v) const {
        auto it = private_attrs.find(v);
        return it == private_attrs.end() ? nullptr : &it->second;
    }
    bool has_private_neighbor(VertexId v) const {
        return detail::sorted_contains(private_neighbors, v);
    }
};

using OverlayMap = std::unordered_map<VertexId, PrivateOverlay>;

// Merged public-private view G'_q for one query vertex. Cheap wrapper over
// the immutable graph and overlay; many views may coexist.
class PPView {
public:
    PPView(const AttributedPublicGraph& g, const PrivateOverlay* overlay, VertexId q)
        : g_(&g), overlay_(overlay), q_(q) {}

    const AttributedPublicGraph& base() const { return *g_; }
    VertexId query() const { return q_; }
    std::size_t num_vertices() const { return g_->num_vertices(); }

    std::size_t degree(VertexId v) const {
        std::size_t d = g_->degree(v);
        if (overlay_) {
            if (v == q_) d += overlay_->private_neighbors.size();
            else if (overlay_->has_private_neighbor(v)) d += 1;
        }
        return d;
    }

    template <typename F>
    void for_each_neighbor(VertexId v, F&& f) const {
        for (VertexId u : g_->neighbors(v)) f(u);
        if (!overlay_) return;
        if (v == q_) {
            for (VertexId u : overlay_->private_neighbors) f(u);
        } else if (overlay_->has_private_neighbor(v)) {
            f(q_);
        }
    }

    std::vector<VertexId> neighbor_set(VertexId v) const {
        std::vector<VertexId> out;
        out.reserve(degree(v));
        for_each_neighbor(v, [&](VertexId u) { out.push_back(u); });
        std::sort(out.begin(), out.end());
        return out;
    }

    // attr'(v) = public attrs plus this overlay's private additions.
    std::vector<AttrId> attr_set(VertexId v) const {
        const auto& pub = g_->attrs(v);
        const std::vector<AttrId>* priv = overlay_ ? overlay_->attrs_of(v) : nullptr;
        if (!priv || priv->empty()) return pub;
        return detail::sorted_union(pub, *priv);
    }

    bool has_attr(VertexId v, AttrId a) const {
        if (g_->has_attr(v, a)) return true;
        const std::vector<AttrId>* priv = overlay_ ? overlay_->attrs_of(v) : nullptr;
        return priv && detail::sorted_contains(*priv, a);
    }

    bool has_all_attrs(VertexId v, const std::vector<AttrId>& required) const {
        for (AttrId a : required)
            if (!has_attr(v, a)) return false;
        return true;
    }

private:
    const AttributedPublicGraph* g_;
    const PrivateOverlay* overlay_;  // null when q has no private graph
    VertexId q_;
};

// Constructs the view G'_q = G u G_q; identical to the public graph when q
// owns no overlay.
PPView pp_view(const AttributedPublicGraph& g, const OverlayMap& overlays, VertexId q);

// Common PP-attributes of a member set within one query's view.
std::vector<AttrId> common_attrs(const PPView& view, const std::vector<VertexId>& members);

enum class Algo { OnlineBasic, OnlineBinary, PPFP };

const char* algo_name(Algo a);
std::optional<Algo> algo_from_name(const std::string& name);

// One query answer. members/shared_attrs are sorted; shared_attrs is always
// recomputed from the view, never trusted from the search path.
struct CommunityResult {
    VertexId query = kNoVertex;
    std::uint32_t k = 0;
    std::vector<VertexId> members;
    std::vector<AttrId> shared_attrs;
    Algo algorithm = Algo::OnlineBasic;
    double elapsed_ms = 0.0;

    bool empty() const { return members.empty(); }
};

}  // namespace ppcs
