#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "ppcs/graph.hpp"

namespace ppcs {

// Per-query private index over the public-private neighborhood N'(q): a
// prefix tree whose root-to-node paths record vertices co-occurring under
// shared attributes. Built per query and discarded afterwards.

struct NodeAttributeEntry {
    VertexId vertex = kNoVertex;
    std::uint32_t count = 0;       // |attr'(v) n attr'(q)|
    std::vector<AttrId> attrs;     // that intersection, sorted
};

// Neighbors with nonempty intersection, sorted by count desc, id asc. This
// is the single global order every theta list follows.
struct NodeAttributeList {
    std::vector<NodeAttributeEntry> entries;
};

struct NodeAttributeMap {
    // theta[a] = vertices of N'(q) holding attribute a, in list order.
    std::map<AttrId, std::vector<VertexId>> theta;
};

struct ExtractedLists {
    NodeAttributeList nal;
    NodeAttributeMap nam;
    std::vector<AttrId> query_attrs;  // attr'(q), sorted
};

ExtractedLists extract_lists(const PPView& view, VertexId q);

class PPFPTree {
public:
    struct Node {
        VertexId vertex = kNoVertex;
        std::uint32_t prefix_attr_num = 0;
        std::uint32_t overall_attr_num = 0;
        std::vector<AttrId> prefix_attrs;  // sorted; |prefix_attrs| == prefix_attr_num
        std::int32_t parent = -1;
        std::uint32_t depth = 0;  // root = 0; equals |prefix_path|
        std::map<VertexId, std::int32_t> children;
    };

    VertexId root_vertex = kNoVertex;
    std::vector<Node> nodes;  // nodes[0] is the root
    // B[v]: occurrences of v in insertion order (x = 1..|B[v]|).
    std::unordered_map<VertexId, std::vector<std::int32_t>> node_links;

    std::size_t num_tree_nodes() const { return nodes.empty() ? 0 : nodes.size() - 1; }
    std::uint32_t max_overall() const;
    // Estimated serialized size: per-node fixed fields plus prefix attrs
    // plus node-link entries.
    std::size_t byte_size() const;
    std::string dump(const std::function<std::string(AttrId)>& attr_name) const;
};

PPFPTree build_tree(const ExtractedLists& lists, VertexId q);

// Vertices on the path from `node` up to (excluding) the root, in
// root-to-node order.
std::vector<VertexId> prefix_path(const PPFPTree& tree, std::int32_t node);

// Requirements for conditional-tree construction at target level l:
// overall >= l, prefix < l, and the occurrence's path reaches >= k nodes.
bool eligible_for_conditional(const PPFPTree& tree, std::int32_t node, std::uint32_t l,
                              std::uint32_t k);
// Variant used when the merged interpretation of the path-length condition
// is enabled: distinct vertices across all of v's prefix paths >= k.
bool eligible_for_conditional_merged(const PPFPTree& tree, std::int32_t node, std::uint32_t l,
                                     std::uint32_t k);

struct ConditionalTree {
    VertexId base_vertex = kNoVertex;
    std::vector<AttrId> cond_attrs;  // C_v = attr'(q) n attr'(v), sorted
    // Merged per-vertex weights over the retained pattern base, sorted by
    // vertex id. counts(u) == |attr'(q) n attr'(v) n attr'(u)| for every
    // retained u.
    std::vector<std::pair<VertexId, std::uint32_t>> counts;

    bool empty() const { return counts.empty(); }
};

// Conditional pattern base of v (each ancestor weighted by the occurrence's
// prefix_attr_num), pruned to vertices carrying all of C_v. When pruning
// strips every vertex but v itself the conditional tree cannot be formed
// and the result is empty.
ConditionalTree build_conditional(const PPFPTree& tree, const PPView& view, VertexId v);

}  // namespace ppcs
