#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ppcs/coreness_tree.hpp"
#include "ppcs/graph.hpp"
#include "ppcs/ppfp.hpp"

namespace ppcs {

struct SearchOptions {
    // When no community with >= 2 shared attributes exists, retry the
    // single-attribute level and then the plain connected k-core.
    bool allow_plain_core = false;
    // Disables the within-size early exit in online_basic.
    bool strict_paper_mode = false;
    // Evaluates the conditional-tree path-length requirement on the merged
    // support instead of a single occurrence's path.
    bool conditional_support_merged = false;
};

// Candidate community prior to validation. q is never a member; it is
// appended at validation time.
struct CandidateSet {
    std::vector<VertexId> private_part;   // from the PP-FP tree, sorted
    std::vector<VertexId> public_part;    // filled by validate_candidate
    std::vector<VertexId> merged;         // private_part u public_part
    std::vector<AttrId> claimed_attrs;    // attributes the candidate shares
};

// Exhaustive ascending-size subset enumeration over attr'(q).
CommunityResult online_basic(const PPView& view, VertexId q, std::uint32_t k,
                             const SearchOptions& opts = {});

// Binary search on the community-size-d feasibility predicate.
CommunityResult online_binary(const PPView& view, VertexId q, std::uint32_t k,
                              const SearchOptions& opts = {});

// Indexed three-phase search: PP-FP-tree attribute selection, public index
// expansion, then k-core validation.
CommunityResult ppfp_search(const PPView& view, VertexId q, std::uint32_t k,
                            const CorenessTree& public_idx, const SearchOptions& opts = {});

// Expands cand.private_part through the public index, then peels the
// induced view subgraph. Members that do not actually hold claimed_attrs in
// the view are dropped before peeling. Fills cand.public_part and
// cand.merged as a side effect.
std::optional<CommunityResult> validate_candidate(const PPView& view, VertexId q, std::uint32_t k,
                                                  CandidateSet& cand,
                                                  const CorenessTree& public_idx);

CommunityResult run_algorithm(Algo algo, const PPView& view, VertexId q, std::uint32_t k,
                              const CorenessTree* public_idx, const SearchOptions& opts = {});

}  // namespace ppcs
