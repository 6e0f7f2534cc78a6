#include "ppcs/ppfp.hpp"

#include <algorithm>
#include <sstream>

namespace ppcs {

ExtractedLists extract_lists(const PPView& view, VertexId q) {
    ExtractedLists out;
    out.query_attrs = view.attr_set(q);
    if (out.query_attrs.empty()) return out;

    // One scan of N'(q).
    view.for_each_neighbor(q, [&](VertexId v) {
        auto inter = detail::sorted_intersect(view.attr_set(v), out.query_attrs);
        if (inter.empty()) return;
        NodeAttributeEntry e;
        e.vertex = v;
        e.count = static_cast<std::uint32_t>(inter.size());
        e.attrs = std::move(inter);
        out.nal.entries.push_back(std::move(e));
    });

    std::sort(out.nal.entries.begin(), out.nal.entries.end(),
              [](const NodeAttributeEntry& a, const NodeAttributeEntry& b) {
                  if (a.count != b.count) return a.count > b.count;
                  return a.vertex < b.vertex;
              });

    for (const auto& e : out.nal.entries)
        for (AttrId a : e.attrs) out.nam.theta[a].push_back(e.vertex);
    return out;
}

std::uint32_t PPFPTree::max_overall() const {
    std::uint32_t best = 0;
    for (std::size_t i = 1; i < nodes.size(); ++i)
        best = std::max(best, nodes[i].overall_attr_num);
    return best;
}

std::size_t PPFPTree::byte_size() const {
    std::size_t bytes = 16;  // root/header
    for (std::size_t i = 1; i < nodes.size(); ++i)
        bytes += 4 * sizeof(std::uint32_t) + nodes[i].prefix_attrs.size() * sizeof(AttrId);
    for (const auto& [v, occs] : node_links) bytes += sizeof(VertexId) + occs.size() * 4;
    return bytes;
}

std::string PPFPTree::dump(const std::function<std::string(AttrId)>& attr_name) const {
    std::ostringstream os;
    std::function<void(std::int32_t, int)> rec = [&](std::int32_t idx, int indent) {
        const Node& n = nodes[static_cast<std::size_t>(idx)];
        if (idx != 0) {
            for (int i = 0; i < indent; ++i) os << "  ";
            os << 'v' << n.vertex << ' ' << n.prefix_attr_num << '/' << n.overall_attr_num << " {";
            for (std::size_t i = 0; i < n.prefix_attrs.size(); ++i) {
                if (i) os << ',';
                os << attr_name(n.prefix_attrs[i]);
            }
            os << "}\n";
        }
        for (const auto& [v, c] : n.children) rec(c, indent + 1);
    };
    rec(0, -1);
    return os.str();
}

PPFPTree build_tree(const ExtractedLists& lists, VertexId q) {
    PPFPTree tree;
    tree.root_vertex = q;
    tree.nodes.emplace_back();  // root

    std::unordered_map<VertexId, std::uint32_t> overall;
    overall.reserve(lists.nal.entries.size());
    for (const auto& e : lists.nal.entries) overall[e.vertex] = e.count;

    // Attribute processing order: descending |theta|, ties by id ascending.
    // Any fixed order preserves the tree invariants; frequency-descending
    // maximizes path sharing.
    std::vector<AttrId> order;
    order.reserve(lists.nam.theta.size());
    for (const auto& [a, verts] : lists.nam.theta) order.push_back(a);
    std::sort(order.begin(), order.end(), [&](AttrId a, AttrId b) {
        std::size_t sa = lists.nam.theta.at(a).size();
        std::size_t sb = lists.nam.theta.at(b).size();
        if (sa != sb) return sa > sb;
        return a < b;
    });

    for (AttrId a : order) {
        std::int32_t r = 0;
        for (VertexId v : lists.nam.theta.at(a)) {
            auto& children = tree.nodes[static_cast<std::size_t>(r)].children;
            auto it = children.find(v);
            std::int32_t cur;
            if (it == children.end()) {
                cur = static_cast<std::int32_t>(tree.nodes.size());
                PPFPTree::Node node;
                node.vertex = v;
                node.prefix_attr_num = 1;
                node.overall_attr_num = overall[v];
                node.prefix_attrs = {a};
                node.parent = r;
                node.depth = tree.nodes[static_cast<std::size_t>(r)].depth + 1;
                children.emplace(v, cur);
                tree.nodes.push_back(std::move(node));
                tree.node_links[v].push_back(cur);
            } else {
                cur = it->second;
                PPFPTree::Node& node = tree.nodes[static_cast<std::size_t>(cur)];
                ++node.prefix_attr_num;
                node.prefix_attrs.insert(
                    std::lower_bound(node.prefix_attrs.begin(), node.prefix_attrs.end(), a), a);
            }
            r = cur;
        }
    }
    return tree;
}

std::vector<VertexId> prefix_path(const PPFPTree& tree, std::int32_t node) {
    std::vector<VertexId> path;
    for (std::int32_t cur = node; cur > 0; cur = tree.nodes[static_cast<std::size_t>(cur)].parent)
        path.push_back(tree.nodes[static_cast<std::size_t>(cur)].vertex);
    std::reverse(path.begin(), path.end());
    return path;
}

bool eligible_for_conditional(const PPFPTree& tree, std::int32_t node, std::uint32_t l,
                              std::uint32_t k) {
    const auto& n = tree.nodes[static_cast<std::size_t>(node)];
    return n.overall_attr_num >= l && n.prefix_attr_num < l && n.depth >= k;
}

bool eligible_for_conditional_merged(const PPFPTree& tree, std::int32_t node, std::uint32_t l,
                                     std::uint32_t k) {
    const auto& n = tree.nodes[static_cast<std::size_t>(node)];
    if (n.overall_attr_num < l || n.prefix_attr_num >= l) return false;
    auto it = tree.node_links.find(n.vertex);
    if (it == tree.node_links.end()) return false;
    std::vector<VertexId> support;
    for (std::int32_t occ : it->second)
        for (VertexId u : prefix_path(tree, occ)) support.push_back(u);
    detail::sort_unique(support);
    return support.size() >= k;
}

ConditionalTree build_conditional(const PPFPTree& tree, const PPView& view, VertexId v) {
    ConditionalTree cond;
    cond.base_vertex = v;
    cond.cond_attrs = detail::sorted_intersect(view.attr_set(view.query()), view.attr_set(v));

    auto it = tree.node_links.find(v);
    if (it == tree.node_links.end()) return cond;

    // Pattern base: every occurrence's prefix path, each vertex weighted by
    // that occurrence's prefix_attr_num.
    std::map<VertexId, std::uint32_t> acc;
    for (std::int32_t occ : it->second) {
        std::uint32_t w = tree.nodes[static_cast<std::size_t>(occ)].prefix_attr_num;
        for (VertexId u : prefix_path(tree, occ)) acc[u] += w;
    }

    std::size_t base_vertices = acc.size();
    for (const auto& [u, weight] : acc) {
        if (u != v && !detail::sorted_subset(cond.cond_attrs, view.attr_set(u))) continue;
        cond.counts.emplace_back(u, weight);
    }
    // A base that pruned down to v alone carries no co-occurrence left.
    if (cond.counts.size() == 1 && base_vertices > 1) cond.counts.clear();
    return cond;
}

}  // namespace ppcs
