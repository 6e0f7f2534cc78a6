#include "ppcs/coreness_tree.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ppcs/core.hpp"

namespace ppcs {

CorenessTree build_coreness_tree(const AttributedPublicGraph& g) {
    CorenessTree idx;
    const std::size_t n = g.num_vertices();
    idx.vertex_to_branch.assign(n, 0);
    if (n == 0) return idx;

    CorenessMap coreness = compute_coreness(g);
    auto components = connected_components(g);

    idx.branches.reserve(components.size());
    for (auto& comp : components) {
        CoreBranch branch;
        branch.component = std::move(comp);
        for (VertexId v : branch.component) {
            idx.vertex_to_branch[v] = static_cast<std::uint32_t>(idx.branches.size());
            CoreTreeNode& node = branch.levels[coreness[v]];
            node.t = coreness[v];
            node.members.push_back(v);  // ascending: component is sorted
            for (AttrId a : g.attrs(v)) node.attr_map[a].push_back(v);
        }
        idx.branches.push_back(std::move(branch));
    }
    return idx;
}

std::vector<VertexId> expand_candidates(const CorenessTree& idx, VertexId q, std::uint32_t k,
                                        const std::vector<AttrId>& required_attrs) {
    if (q >= idx.num_vertices())
        throw NotFoundError("expand_candidates: unknown vertex " + std::to_string(q));
    if (required_attrs.empty())
        throw ContractError("expand_candidates: required_attrs must be nonempty");

    const CoreBranch& branch = idx.branches[idx.vertex_to_branch[q]];
    std::vector<VertexId> result;
    for (auto it = branch.levels.lower_bound(k); it != branch.levels.end(); ++it) {
        const CoreTreeNode& node = it->second;
        // Intersection over the required attribute lists at this level.
        std::vector<VertexId> acc;
        bool dead = false;
        for (std::size_t i = 0; i < required_attrs.size(); ++i) {
            auto at = node.attr_map.find(required_attrs[i]);
            if (at == node.attr_map.end()) {
                dead = true;
                break;
            }
            if (i == 0) acc = at->second;
            else acc = detail::sorted_intersect(acc, at->second);
            if (acc.empty()) {
                dead = true;
                break;
            }
        }
        if (!dead) result.insert(result.end(), acc.begin(), acc.end());
    }
    detail::sort_unique(result);
    auto qit = std::lower_bound(result.begin(), result.end(), q);
    if (qit != result.end() && *qit == q) result.erase(qit);
    return result;
}

namespace {

constexpr char kMagic[4] = {'P', 'P', 'C', 'T'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& out, std::uint32_t x) {
    out.write(reinterpret_cast<const char*>(&x), sizeof(x));
}
void put_u64(std::ostream& out, std::uint64_t x) {
    out.write(reinterpret_cast<const char*>(&x), sizeof(x));
}
void put_vec(std::ostream& out, const std::vector<VertexId>& v) {
    put_u64(out, v.size());
    if (!v.empty())
        out.write(reinterpret_cast<const char*>(v.data()),
                  static_cast<std::streamsize>(v.size() * sizeof(VertexId)));
}

std::uint32_t get_u32(std::istream& in) {
    std::uint32_t x = 0;
    in.read(reinterpret_cast<char*>(&x), sizeof(x));
    if (!in) throw InputError("truncated index file");
    return x;
}
std::uint64_t get_u64(std::istream& in) {
    std::uint64_t x = 0;
    in.read(reinterpret_cast<char*>(&x), sizeof(x));
    if (!in) throw InputError("truncated index file");
    return x;
}
std::vector<VertexId> get_vec(std::istream& in) {
    std::uint64_t len = get_u64(in);
    std::vector<VertexId> v(len);
    if (len) {
        in.read(reinterpret_cast<char*>(v.data()),
                static_cast<std::streamsize>(len * sizeof(VertexId)));
        if (!in) throw InputError("truncated index file");
    }
    return v;
}

}  // namespace

void save_coreness_tree(std::ostream& out, const CorenessTree& idx) {
    out.write(kMagic, 4);
    put_u32(out, kVersion);
    put_u64(out, idx.num_vertices());
    put_u64(out, idx.branches.size());
    for (const auto& branch : idx.branches) {
        put_vec(out, branch.component);
        put_u64(out, branch.levels.size());
        for (const auto& [t, node] : branch.levels) {
            put_u32(out, t);
            put_vec(out, node.members);
            put_u64(out, node.attr_map.size());
            for (const auto& [a, verts] : node.attr_map) {
                put_u32(out, a);
                put_vec(out, verts);
            }
        }
    }
}

CorenessTree load_coreness_tree(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string(magic, 4) != std::string(kMagic, 4))
        throw InputError("not a coreness tree index file");
    std::uint32_t version = get_u32(in);
    if (version != kVersion)
        throw InputError("unsupported index version " + std::to_string(version));

    CorenessTree idx;
    std::uint64_t n = get_u64(in);
    idx.vertex_to_branch.assign(n, 0);
    std::uint64_t num_branches = get_u64(in);
    idx.branches.resize(num_branches);
    for (std::uint64_t b = 0; b < num_branches; ++b) {
        CoreBranch& branch = idx.branches[b];
        branch.component = get_vec(in);
        for (VertexId v : branch.component) {
            if (v >= n) throw InputError("index vertex id out of range");
            idx.vertex_to_branch[v] = static_cast<std::uint32_t>(b);
        }
        std::uint64_t num_levels = get_u64(in);
        for (std::uint64_t l = 0; l < num_levels; ++l) {
            std::uint32_t t = get_u32(in);
            CoreTreeNode node;
            node.t = t;
            node.members = get_vec(in);
            std::uint64_t num_attrs = get_u64(in);
            for (std::uint64_t i = 0; i < num_attrs; ++i) {
                AttrId a = get_u32(in);
                node.attr_map[a] = get_vec(in);
            }
            branch.levels.emplace(t, std::move(node));
        }
    }
    return idx;
}

void save_coreness_tree_file(const std::string& path, const CorenessTree& idx) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write index file: " + path);
    save_coreness_tree(out, idx);
    if (!out) throw InputError("failed writing index file: " + path);
}

CorenessTree load_coreness_tree_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open index file: " + path);
    return load_coreness_tree(in);
}

std::size_t coreness_tree_byte_size(const CorenessTree& idx) {
    std::ostringstream os(std::ios::binary);
    save_coreness_tree(os, idx);
    return os.str().size();
}

}  // namespace ppcs
