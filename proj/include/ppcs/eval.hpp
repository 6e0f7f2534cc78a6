#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppcs/coreness_tree.hpp"
#include "ppcs/graph.hpp"
#include "ppcs/search.hpp"

namespace ppcs {

// Private-data synthesis following the evaluation protocol: a fraction of
// each query node's incident edges become private, 1-3 of its public
// attributes move to the private side, and a fraction of all nodes receive
// one fresh noise attribute.
struct SynthesisConfig {
    double edge_fraction = 0.5;
    std::uint32_t attrs_min = 1;
    std::uint32_t attrs_max = 3;
    double noise_node_fraction = 0.1;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SynthesisResult {
    AttributedPublicGraph graph;  // reduced public graph
    OverlayMap overlays;
};

SynthesisResult synthesize_overlays(const AttributedPublicGraph& g,
                                    const std::vector<VertexId>& queries,
                                    const SynthesisConfig& cfg);

// F1 between a found and a ground-truth community; 0 when either side is
// empty or the intersection is empty.
double f1_score(const std::vector<VertexId>& found, const std::vector<VertexId>& truth);

struct QueryRecord {
    VertexId query = kNoVertex;
    std::uint32_t k = 0;
    Algo algo = Algo::OnlineBasic;
    std::uint32_t shared_attr_count = 0;
    std::uint32_t member_count = 0;
    double elapsed_ms = 0.0;
    std::optional<double> f1;
    std::optional<double> gain;
    std::string error;  // nonempty when the cell failed

    bool failed() const { return !error.empty(); }
};

struct RuntimeStats {
    double mean_ms = 0.0;
    double p50_ms = 0.0;
    double p90_ms = 0.0;
    double p99_ms = 0.0;
};

struct QualityReport {
    std::vector<QueryRecord> records;
    double mean_gain = 0.0;
    std::size_t gain_count = 0;
    double mean_f1 = 0.0;
    std::size_t f1_count = 0;
    std::size_t failures = 0;
    std::map<Algo, RuntimeStats> runtime;
};

struct BenchConfig {
    std::vector<std::uint32_t> ks;
    std::vector<Algo> algos;
    SearchOptions search;
    int threads = 1;  // <= 0 means the OpenMP default
};

// Executes every (query, k, algo) cell over the immutable inputs. Cells run
// concurrently under OpenMP; per-cell failures are recorded, never abort
// the sweep. Ground-truth F1 uses the best-matching community containing
// the query.
QualityReport run_benchmark(const AttributedPublicGraph& g, const OverlayMap& overlays,
                            const CorenessTree& public_idx, const std::vector<VertexId>& queries,
                            const BenchConfig& cfg,
                            const std::vector<std::vector<VertexId>>* ground_truth = nullptr);

struct SweepRow {
    VertexId query = kNoVertex;
    std::uint32_t attr_count = 0;   // |attr'(q)|
    std::size_t tree_nodes = 0;
    std::size_t tree_bytes = 0;
};

// Per-query PP-FP-tree size measurements for the index sensitivity trend.
std::vector<SweepRow> sensitivity_sweep(const AttributedPublicGraph& g, const OverlayMap& overlays,
                                        const std::vector<VertexId>& queries);

void write_report_csv(std::ostream& out, const AttributedPublicGraph& g,
                      const QualityReport& report);
void write_report_json(std::ostream& out, const QualityReport& report);
void write_sweep_csv(std::ostream& out, const AttributedPublicGraph& g,
                     const std::vector<SweepRow>& rows);

}  // namespace ppcs
