#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ppcs/graph.hpp"

namespace ppcs {

// Global public index: one branch per connected component, one tree node per
// occurring coreness value, each level carrying an attribute -> vertex map.
// Built from public attributes only; immutable after build.

struct CoreTreeNode {
    std::uint32_t t = 0;                               // coreness value
    std::vector<VertexId> members;                     // coreness exactly t, sorted
    std::map<AttrId, std::vector<VertexId>> attr_map;  // sorted vertex arrays
};

struct CoreBranch {
    std::vector<VertexId> component;           // sorted
    std::map<std::uint32_t, CoreTreeNode> levels;  // ascending t
};

struct CorenessTree {
    std::vector<CoreBranch> branches;
    std::vector<std::uint32_t> vertex_to_branch;  // vertex -> branch index

    std::size_t num_vertices() const { return vertex_to_branch.size(); }
};

CorenessTree build_coreness_tree(const AttributedPublicGraph& g);

// All vertices in q's branch with coreness >= k carrying every required
// attribute (public attributes only); q itself excluded.
std::vector<VertexId> expand_candidates(const CorenessTree& idx, VertexId q, std::uint32_t k,
                                        const std::vector<AttrId>& required_attrs);

// Versioned binary serialization; round-trips bit-exactly.
void save_coreness_tree(std::ostream& out, const CorenessTree& idx);
CorenessTree load_coreness_tree(std::istream& in);
void save_coreness_tree_file(const std::string& path, const CorenessTree& idx);
CorenessTree load_coreness_tree_file(const std::string& path);

std::size_t coreness_tree_byte_size(const CorenessTree& idx);

}  // namespace ppcs
