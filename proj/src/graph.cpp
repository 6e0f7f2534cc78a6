#include "ppcs/graph.hpp"

namespace ppcs {

VertexId AttributedPublicGraph::intern_vertex(ExternalId ext) {
    auto it = vertex_ids_.find(ext);
    if (it != vertex_ids_.end()) return it->second;
    VertexId v = static_cast<VertexId>(adj_.size());
    vertex_ids_.emplace(ext, v);
    external_ids_.push_back(ext);
    adj_.emplace_back();
    attrs_.emplace_back();
    return v;
}

AttrId AttributedPublicGraph::intern_attr(const std::string& name) {
    auto it = attr_ids_.find(name);
    if (it != attr_ids_.end()) return it->second;
    AttrId a = static_cast<AttrId>(attr_names_.size());
    attr_ids_.emplace(name, a);
    attr_names_.push_back(name);
    return a;
}

bool AttributedPublicGraph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(external_id(u)));
    if (has_edge(u, v)) return false;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++num_edges_;
    return true;
}

bool AttributedPublicGraph::remove_edge(VertexId u, VertexId v) {
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it == adj_[u].end() || *it != v) return false;
    adj_[u].erase(it);
    auto jt = std::lower_bound(adj_[v].begin(), adj_[v].end(), u);
    adj_[v].erase(jt);
    --num_edges_;
    return true;
}

void AttributedPublicGraph::add_attr(VertexId v, AttrId a) {
    auto& s = attrs_[v];
    auto it = std::lower_bound(s.begin(), s.end(), a);
    if (it != s.end() && *it == a) return;
    s.insert(it, a);
}

bool AttributedPublicGraph::remove_attr(VertexId v, AttrId a) {
    auto& s = attrs_[v];
    auto it = std::lower_bound(s.begin(), s.end(), a);
    if (it == s.end() || *it != a) return false;
    s.erase(it);
    return true;
}

void AttributedPublicGraph::finalize() {
    num_edges_ = 0;
    for (auto& nbrs : adj_) {
        detail::sort_unique(nbrs);
        num_edges_ += nbrs.size();
    }
    num_edges_ /= 2;
    for (auto& s : attrs_) detail::sort_unique(s);
}

PPView pp_view(const AttributedPublicGraph& g, const OverlayMap& overlays, VertexId q) {
    if (q >= g.num_vertices())
        throw NotFoundError("query vertex " + std::to_string(q) + " not in graph");
    auto it = overlays.find(q);
    return PPView(g, it == overlays.end() ? nullptr : &it->second, q);
}

std::vector<AttrId> common_attrs(const PPView& view, const std::vector<VertexId>& members) {
    if (members.empty()) throw ContractError("common_attrs over empty member set");
    std::vector<AttrId> acc = view.attr_set(members.front());
    for (std::size_t i = 1; i < members.size() && !acc.empty(); ++i)
        acc = detail::sorted_intersect(acc, view.attr_set(members[i]));
    return acc;
}

const char* algo_name(Algo a) {
    switch (a) {
        case Algo::OnlineBasic: return "basic";
        case Algo::OnlineBinary: return "binary";
        case Algo::PPFP: return "ppfp";
    }
    return "?";
}

std::optional<Algo> algo_from_name(const std::string& name) {
    if (name == "basic") return Algo::OnlineBasic;
    if (name == "binary") return Algo::OnlineBinary;
    if (name == "ppfp") return Algo::PPFP;
    return std::nullopt;
}

}  // namespace ppcs
