#include "ppcs/eval.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

#include "ppcs/log.hpp"
#include "ppcs/ppfp.hpp"

namespace ppcs {

void SynthesisConfig::validate() const {
    if (edge_fraction < 0.0 || edge_fraction > 1.0)
        throw InputError("edge_fraction must lie in [0,1]");
    if (noise_node_fraction < 0.0 || noise_node_fraction > 1.0)
        throw InputError("noise_node_fraction must lie in [0,1]");
    if (attrs_min > attrs_max) throw InputError("attrs_min must not exceed attrs_max");
}

namespace {

// Independent deterministic streams per synthesis step.
constexpr std::uint64_t kEdgeStream = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kAttrStream = 0xc2b2ae3d27d4eb4fULL;
constexpr std::uint64_t kNoiseStream = 0x165667b19e3779f9ULL;

void add_private_neighbor(OverlayMap& overlays, VertexId owner, VertexId nbr) {
    auto& ov = overlays[owner];
    ov.owner = owner;
    auto it = std::lower_bound(ov.private_neighbors.begin(), ov.private_neighbors.end(), nbr);
    if (it == ov.private_neighbors.end() || *it != nbr) ov.private_neighbors.insert(it, nbr);
}

}  // namespace

SynthesisResult synthesize_overlays(const AttributedPublicGraph& g,
                                    const std::vector<VertexId>& queries,
                                    const SynthesisConfig& cfg) {
    cfg.validate();
    SynthesisResult out;
    out.graph = g;

    std::vector<char> is_query(g.num_vertices(), 0);
    for (VertexId q : queries) {
        if (q >= g.num_vertices())
            throw NotFoundError("synthesis query " + std::to_string(q) + " not in graph");
        is_query[q] = 1;
    }

    std::mt19937_64 edge_rng(cfg.seed ^ kEdgeStream);
    std::mt19937_64 attr_rng(cfg.seed ^ kAttrStream);

    std::vector<char> processed(g.num_vertices(), 0);
    for (VertexId q : queries) {
        if (processed[q]) continue;
        processed[q] = 1;

        // Privatize ceil(fraction * deg) incident edges, chosen uniformly.
        std::vector<VertexId> nbrs = out.graph.neighbors(q);
        std::size_t take =
            static_cast<std::size_t>(std::ceil(cfg.edge_fraction * static_cast<double>(nbrs.size())));
        std::shuffle(nbrs.begin(), nbrs.end(), edge_rng);
        for (std::size_t i = 0; i < take; ++i) {
            VertexId w = nbrs[i];
            out.graph.remove_edge(q, w);
            add_private_neighbor(out.overlays, q, w);
            // An edge between two query owners belongs to both star-graphs,
            // keeping per-owner degree conservation.
            if (is_query[w]) add_private_neighbor(out.overlays, w, q);
        }

        // Move 1-3 public attributes of q to its private side.
        std::uint32_t c = cfg.attrs_max == 0
                              ? 0
                              : std::uniform_int_distribution<std::uint32_t>(cfg.attrs_min,
                                                                             cfg.attrs_max)(attr_rng);
        std::vector<AttrId> pool = out.graph.attrs(q);
        c = std::min<std::uint32_t>(c, static_cast<std::uint32_t>(pool.size()));
        if (c > 0) {
            std::shuffle(pool.begin(), pool.end(), attr_rng);
            auto& ov = out.overlays[q];
            ov.owner = q;
            auto& priv = ov.private_attrs[q];
            for (std::uint32_t i = 0; i < c; ++i) {
                out.graph.remove_attr(q, pool[i]);
                priv.push_back(pool[i]);
            }
            detail::sort_unique(priv);
        }
    }

    // Fresh noise attributes on a fraction of all nodes.
    std::size_t noise_count =
        static_cast<std::size_t>(std::llround(cfg.noise_node_fraction *
                                              static_cast<double>(g.num_vertices())));
    if (noise_count > 0) {
        std::mt19937_64 noise_rng(cfg.seed ^ kNoiseStream);
        std::vector<VertexId> order(g.num_vertices());
        for (VertexId v = 0; v < g.num_vertices(); ++v) order[v] = v;
        std::shuffle(order.begin(), order.end(), noise_rng);
        std::size_t serial = 0;
        for (std::size_t i = 0; i < noise_count && i < order.size(); ++i) {
            std::string name;
            do {
                name = "noise_" + std::to_string(serial++);
            } while (out.graph.find_attr(name));
            out.graph.add_attr(order[i], out.graph.intern_attr(name));
        }
    }
    return out;
}

double f1_score(const std::vector<VertexId>& found, const std::vector<VertexId>& truth) {
    if (found.empty() || truth.empty()) return 0.0;
    std::size_t hit = detail::sorted_intersect(found, truth).size();
    if (hit == 0) return 0.0;
    double prec = static_cast<double>(hit) / static_cast<double>(found.size());
    double recall = static_cast<double>(hit) / static_cast<double>(truth.size());
    return 2.0 * prec * recall / (prec + recall);
}

namespace {

struct Cell {
    VertexId query;
    std::uint32_t k;
    Algo algo;
};

RuntimeStats stats_of(std::vector<double>& samples) {
    RuntimeStats s;
    if (samples.empty()) return s;
    std::sort(samples.begin(), samples.end());
    double sum = 0.0;
    for (double x : samples) sum += x;
    s.mean_ms = sum / static_cast<double>(samples.size());
    auto pct = [&](double p) {
        std::size_t i = static_cast<std::size_t>(p * static_cast<double>(samples.size() - 1));
        return samples[i];
    };
    s.p50_ms = pct(0.50);
    s.p90_ms = pct(0.90);
    s.p99_ms = pct(0.99);
    return s;
}

}  // namespace

QualityReport run_benchmark(const AttributedPublicGraph& g, const OverlayMap& overlays,
                            const CorenessTree& public_idx, const std::vector<VertexId>& queries,
                            const BenchConfig& cfg,
                            const std::vector<std::vector<VertexId>>* ground_truth) {
    std::vector<Cell> cells;
    cells.reserve(queries.size() * cfg.ks.size() * cfg.algos.size());
    for (VertexId q : queries)
        for (std::uint32_t k : cfg.ks)
            for (Algo a : cfg.algos) cells.push_back({q, k, a});

    QualityReport report;
    report.records.resize(cells.size());
    std::vector<std::vector<VertexId>> member_sets(cells.size());

    // Query cells are independent over immutable inputs; the record vector
    // is preallocated so concurrent cells never contend.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(cfg.threads > 0 ? cfg.threads : omp_get_max_threads())
#endif
    for (long long i = 0; i < static_cast<long long>(cells.size()); ++i) {
        const Cell& cell = cells[static_cast<std::size_t>(i)];
        QueryRecord rec;
        rec.query = cell.query;
        rec.k = cell.k;
        rec.algo = cell.algo;
        try {
            PPView view = pp_view(g, overlays, cell.query);
            CommunityResult res =
                run_algorithm(cell.algo, view, cell.query, cell.k, &public_idx, cfg.search);
            rec.shared_attr_count = static_cast<std::uint32_t>(res.shared_attrs.size());
            rec.member_count = static_cast<std::uint32_t>(res.members.size());
            rec.elapsed_ms = res.elapsed_ms;
            member_sets[static_cast<std::size_t>(i)] = std::move(res.members);
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
        report.records[static_cast<std::size_t>(i)] = std::move(rec);
    }

    // Gain relative to the exact algorithm present in the sweep, per
    // (query, k) group.
    std::optional<Algo> exact;
    for (Algo a : cfg.algos)
        if (a == Algo::OnlineBasic || a == Algo::OnlineBinary) {
            exact = a;
            break;
        }
    if (exact) {
        std::map<std::pair<VertexId, std::uint32_t>, std::uint32_t> exact_shared;
        for (const auto& rec : report.records)
            if (rec.algo == *exact && !rec.failed()) exact_shared[{rec.query, rec.k}] = rec.shared_attr_count;
        for (auto& rec : report.records) {
            if (rec.failed()) continue;
            auto it = exact_shared.find({rec.query, rec.k});
            if (it == exact_shared.end() || it->second == 0) continue;
            rec.gain = static_cast<double>(rec.shared_attr_count) / static_cast<double>(it->second);
        }
    }

    if (ground_truth) {
        std::vector<std::vector<VertexId>> truth_sets = *ground_truth;
        for (auto& t : truth_sets) detail::sort_unique(t);
        for (std::size_t i = 0; i < report.records.size(); ++i) {
            auto& rec = report.records[i];
            if (rec.failed()) continue;
            double best = -1.0;
            for (const auto& truth : truth_sets) {
                if (!detail::sorted_contains(truth, rec.query)) continue;
                best = std::max(best, f1_score(member_sets[i], truth));
            }
            if (best >= 0.0) {
                rec.f1 = best;
                if (member_sets[i].empty())
                    log_info("query " + std::to_string(rec.query) + " k=" +
                             std::to_string(rec.k) + " " + algo_name(rec.algo) +
                             ": empty community scored F1=0 against ground truth");
            }
        }
    }

    std::map<Algo, std::vector<double>> samples;
    double gain_sum = 0.0, f1_sum = 0.0;
    for (const auto& rec : report.records) {
        if (rec.failed()) {
            ++report.failures;
            continue;
        }
        samples[rec.algo].push_back(rec.elapsed_ms);
        if (rec.gain) {
            gain_sum += *rec.gain;
            ++report.gain_count;
        }
        if (rec.f1) {
            f1_sum += *rec.f1;
            ++report.f1_count;
        }
    }
    if (report.gain_count) report.mean_gain = gain_sum / static_cast<double>(report.gain_count);
    if (report.f1_count) report.mean_f1 = f1_sum / static_cast<double>(report.f1_count);
    for (auto& [algo, xs] : samples) report.runtime[algo] = stats_of(xs);
    return report;
}

std::vector<SweepRow> sensitivity_sweep(const AttributedPublicGraph& g, const OverlayMap& overlays,
                                        const std::vector<VertexId>& queries) {
    std::vector<SweepRow> rows;
    rows.reserve(queries.size());
    for (VertexId q : queries) {
        PPView view = pp_view(g, overlays, q);
        ExtractedLists lists = extract_lists(view, q);
        PPFPTree tree = build_tree(lists, q);
        SweepRow row;
        row.query = q;
        row.attr_count = static_cast<std::uint32_t>(lists.query_attrs.size());
        row.tree_nodes = tree.num_tree_nodes();
        row.tree_bytes = tree.byte_size();
        rows.push_back(row);
    }
    return rows;
}

void write_report_csv(std::ostream& out, const AttributedPublicGraph& g,
                      const QualityReport& report) {
    out << "query,k,algo,shared_attr_count,member_count,elapsed_ms,f1,gain\n";
    for (const auto& rec : report.records) {
        out << g.external_id(rec.query) << ',' << rec.k << ',' << algo_name(rec.algo) << ',';
        if (rec.failed()) {
            out << ",,,," << '\n';
            continue;
        }
        out << rec.shared_attr_count << ',' << rec.member_count << ',' << rec.elapsed_ms << ',';
        if (rec.f1) out << *rec.f1;
        out << ',';
        if (rec.gain) out << *rec.gain;
        out << '\n';
    }
}

void write_report_json(std::ostream& out, const QualityReport& report) {
    nlohmann::json j;
    j["cells"] = report.records.size();
    j["failures"] = report.failures;
    if (report.gain_count) {
        j["mean_gain"] = report.mean_gain;
        j["gain_count"] = report.gain_count;
    }
    if (report.f1_count) {
        j["mean_f1"] = report.mean_f1;
        j["f1_count"] = report.f1_count;
    }
    for (const auto& [algo, stats] : report.runtime) {
        nlohmann::json s;
        s["mean_ms"] = stats.mean_ms;
        s["p50_ms"] = stats.p50_ms;
        s["p90_ms"] = stats.p90_ms;
        s["p99_ms"] = stats.p99_ms;
        j["runtime"][algo_name(algo)] = s;
    }
    out << j.dump() << '\n';
}

void write_sweep_csv(std::ostream& out, const AttributedPublicGraph& g,
                     const std::vector<SweepRow>& rows) {
    out << "query,attr_count,tree_nodes,tree_bytes\n";
    for (const auto& r : rows)
        out << g.external_id(r.query) << ',' << r.attr_count << ',' << r.tree_nodes << ','
            << r.tree_bytes << '\n';
}

}  // namespace ppcs
