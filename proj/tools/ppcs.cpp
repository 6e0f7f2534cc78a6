#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ppcs/core.hpp"
#include "ppcs/coreness_tree.hpp"
#include "ppcs/eval.hpp"
#include "ppcs/io.hpp"
#include "ppcs/log.hpp"
#include "ppcs/search.hpp"

namespace {

using namespace ppcs;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitInternal = 4;

struct CommonPaths {
    std::string edges;
    std::string attrs;
    std::string overlays;
    std::string index;
};

void add_graph_options(CLI::App* cmd, CommonPaths& paths, bool with_overlays = true,
                       bool with_index = false) {
    cmd->add_option("--edges", paths.edges, "public edge file")->required();
    cmd->add_option("--attrs", paths.attrs, "public attribute file")->required();
    if (with_overlays) cmd->add_option("--overlays", paths.overlays, "private overlay file");
    if (with_index) cmd->add_option("--index", paths.index, "serialized coreness tree index");
}

struct LoadedData {
    AttributedPublicGraph graph;
    OverlayMap overlays;
};

LoadedData load_data(const CommonPaths& paths) {
    LoadedData d;
    d.graph = load_public_graph_files(paths.edges, paths.attrs);
    log_info("loaded graph: " + std::to_string(d.graph.num_vertices()) + " vertices, " +
             std::to_string(d.graph.num_edges()) + " edges");
    if (!paths.overlays.empty()) {
        d.overlays = load_private_overlays_file(paths.overlays, d.graph);
        log_info("loaded " + std::to_string(d.overlays.size()) + " private overlays");
    }
    return d;
}

CorenessTree obtain_index(const CommonPaths& paths, const AttributedPublicGraph& g) {
    if (!paths.index.empty()) {
        CorenessTree idx = load_coreness_tree_file(paths.index);
        if (idx.num_vertices() != g.num_vertices())
            throw InputError("index file does not match the loaded graph");
        return idx;
    }
    log_info("no index file given; building coreness tree in memory");
    return build_coreness_tree(g);
}

std::vector<std::uint32_t> parse_uint_list(const std::string& csv, const char* what) {
    std::vector<std::uint32_t> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw InputError(std::string("bad ") + what + " value '" + tok + "'");
        out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    if (out.empty()) throw InputError(std::string("empty ") + what + " list");
    return out;
}

std::vector<Algo> parse_algos(const std::string& csv) {
    std::vector<Algo> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto a = algo_from_name(tok);
        if (!a) throw InputError("unknown algorithm '" + tok + "' (use basic|binary|ppfp)");
        out.push_back(*a);
    }
    if (out.empty()) throw InputError("empty algorithm list");
    return out;
}

nlohmann::json result_to_json(const AttributedPublicGraph& g, const CommunityResult& r) {
    nlohmann::json j;
    j["query"] = g.external_id(r.query);
    j["k"] = r.k;
    j["algo"] = algo_name(r.algorithm);
    auto members = nlohmann::json::array();
    for (VertexId v : r.members) members.push_back(g.external_id(v));
    j["members"] = std::move(members);
    auto attrs = nlohmann::json::array();
    for (AttrId a : r.shared_attrs) attrs.push_back(g.attr_name(a));
    j["shared_attrs"] = std::move(attrs);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

void write_file_atomic(const std::string& path, const std::function<void(std::ostream&)>& fn,
                       bool binary = false) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, binary ? std::ios::binary : std::ios::out);
        if (!out) throw InputError("cannot write file: " + path);
        fn(out);
        if (!out) throw InputError("failed writing file: " + path);
    }
    fs::rename(tmp, path);
}

int cmd_build_index(const CommonPaths& paths, const std::string& output) {
    auto t0 = std::chrono::steady_clock::now();
    AttributedPublicGraph g = load_public_graph_files(paths.edges, paths.attrs);
    CorenessTree idx = build_coreness_tree(g);
    double build_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    write_file_atomic(output, [&](std::ostream& out) { save_coreness_tree(out, idx); }, true);
    std::cout << "index written to " << output << "\n"
              << "build_ms " << build_ms << "\n"
              << "index_bytes " << coreness_tree_byte_size(idx) << "\n"
              << "branches " << idx.branches.size() << "\n";
    return kExitOk;
}

int cmd_query(const CommonPaths& paths, std::uint64_t ext_q, std::uint32_t k,
              const std::string& algo_str, const SearchOptions& opts,
              const std::string& output_format) {
    LoadedData d = load_data(paths);
    auto algo = algo_from_name(algo_str);
    if (!algo) throw InputError("unknown algorithm '" + algo_str + "'");
    VertexId q = d.graph.require_vertex(ext_q);

    CorenessTree idx;
    if (*algo == Algo::PPFP) idx = obtain_index(paths, d.graph);

    PPView view = pp_view(d.graph, d.overlays, q);
    CommunityResult r = run_algorithm(*algo, view, q, k, &idx, opts);

    if (output_format == "csv") {
        std::cout << "query,k,algo,shared_attr_count,member_count,elapsed_ms\n"
                  << d.graph.external_id(r.query) << ',' << r.k << ',' << algo_name(r.algorithm)
                  << ',' << r.shared_attrs.size() << ',' << r.members.size() << ',' << r.elapsed_ms
                  << '\n';
    } else {
        std::cout << result_to_json(d.graph, r).dump() << '\n';
    }
    return kExitOk;
}

int cmd_gen_private(const CommonPaths& paths, const std::string& query_path,
                    const SynthesisConfig& cfg, const std::string& out_overlays,
                    const std::string& out_edges, const std::string& out_attrs) {
    AttributedPublicGraph g = load_public_graph_files(paths.edges, paths.attrs);
    std::vector<VertexId> queries = load_query_file(query_path, g);
    SynthesisResult res = synthesize_overlays(g, queries, cfg);
    write_file_atomic(out_overlays,
                      [&](std::ostream& out) { write_overlays(out, res.graph, res.overlays); });
    write_file_atomic(out_edges, [&](std::ostream& out) { write_edges(out, res.graph); });
    write_file_atomic(out_attrs, [&](std::ostream& out) { write_attrs(out, res.graph); });
    std::cout << "overlays " << res.overlays.size() << "\n"
              << "public_edges " << res.graph.num_edges() << "\n";
    return kExitOk;
}

int run_bench_pipeline(const LoadedData& d, const CorenessTree& idx,
                       const std::vector<VertexId>& queries, const BenchConfig& bench,
                       const std::string& ground_truth_path, const std::string& out_csv,
                       const std::string& out_json, const std::string& plot_dir) {
    std::vector<std::vector<VertexId>> truth;
    if (!ground_truth_path.empty()) truth = load_ground_truth_file(ground_truth_path, d.graph);

    QualityReport report =
        run_benchmark(d.graph, d.overlays, idx, queries, bench, truth.empty() ? nullptr : &truth);

    if (!out_csv.empty())
        write_file_atomic(out_csv,
                          [&](std::ostream& out) { write_report_csv(out, d.graph, report); });
    if (!out_json.empty())
        write_file_atomic(out_json, [&](std::ostream& out) { write_report_json(out, report); });
    write_report_json(std::cout, report);

    if (!plot_dir.empty()) {
        fs::create_directories(plot_dir);
        // Per-(algo, k) runtime and quality aggregates for external plotting.
        std::map<std::pair<Algo, std::uint32_t>, std::vector<double>> times;
        std::map<std::pair<Algo, std::uint32_t>, std::pair<double, std::size_t>> gains, f1s;
        for (const auto& rec : report.records) {
            if (rec.failed()) continue;
            auto key = std::make_pair(rec.algo, rec.k);
            times[key].push_back(rec.elapsed_ms);
            if (rec.gain) {
                gains[key].first += *rec.gain;
                gains[key].second += 1;
            }
            if (rec.f1) {
                f1s[key].first += *rec.f1;
                f1s[key].second += 1;
            }
        }
        std::ofstream rt(fs::path(plot_dir) / "runtime_by_k.csv");
        rt << "algo,k,median_ms,mean_ms,samples\n";
        for (auto& [key, xs] : times) {
            std::sort(xs.begin(), xs.end());
            double mean = 0.0;
            for (double x : xs) mean += x;
            mean /= static_cast<double>(xs.size());
            rt << algo_name(key.first) << ',' << key.second << ',' << xs[xs.size() / 2] << ','
               << mean << ',' << xs.size() << '\n';
        }
        std::ofstream qt(fs::path(plot_dir) / "quality_by_k.csv");
        qt << "algo,k,mean_gain,mean_f1,samples\n";
        for (const auto& [key, xs] : times) {
            qt << algo_name(key.first) << ',' << key.second << ',';
            auto g = gains.find(key);
            if (g != gains.end() && g->second.second)
                qt << g->second.first / static_cast<double>(g->second.second);
            qt << ',';
            auto f = f1s.find(key);
            if (f != f1s.end() && f->second.second)
                qt << f->second.first / static_cast<double>(f->second.second);
            qt << ',' << xs.size() << '\n';
        }
        std::ofstream sw(fs::path(plot_dir) / "tree_size_by_attrs.csv");
        write_sweep_csv(sw, d.graph, sensitivity_sweep(d.graph, d.overlays, queries));
    }

    std::size_t ok = report.records.size() - report.failures;
    if (report.records.size() > 0 && ok == 0) {
        std::cerr << "all " << report.records.size() << " cells failed\n";
        return kExitInput;
    }
    return kExitOk;
}

int cmd_bench(const CommonPaths& paths, const std::string& query_path, const std::string& ks_csv,
              const std::string& algos_csv, const SearchOptions& search, int threads,
              const std::string& ground_truth_path, const std::string& out_csv,
              const std::string& out_json, const std::string& plot_dir) {
    LoadedData d = load_data(paths);
    CorenessTree idx = obtain_index(paths, d.graph);
    std::vector<VertexId> queries = load_query_file(query_path, d.graph);
    BenchConfig bench;
    bench.ks = parse_uint_list(ks_csv, "k");
    bench.algos = parse_algos(algos_csv);
    bench.search = search;
    bench.threads = threads;
    return run_bench_pipeline(d, idx, queries, bench, ground_truth_path, out_csv, out_json,
                              plot_dir);
}

// Full protocol: synthesize private data from the raw public graph, build
// the index on the reduced graph, then benchmark.
int cmd_eval(const CommonPaths& paths, const std::string& query_path, std::size_t num_queries,
             const SynthesisConfig& syn, const std::string& ks_csv, const std::string& algos_csv,
             const SearchOptions& search, int threads, const std::string& ground_truth_path,
             const std::string& out_csv, const std::string& out_json) {
    AttributedPublicGraph raw = load_public_graph_files(paths.edges, paths.attrs);

    std::vector<VertexId> queries;
    if (!query_path.empty()) {
        queries = load_query_file(query_path, raw);
    } else {
        // Sample query nodes with nonzero degree, seeded.
        std::vector<VertexId> pool;
        for (VertexId v = 0; v < raw.num_vertices(); ++v)
            if (raw.degree(v) > 0) pool.push_back(v);
        std::mt19937_64 rng(syn.seed);
        std::shuffle(pool.begin(), pool.end(), rng);
        if (pool.size() > num_queries) pool.resize(num_queries);
        queries = std::move(pool);
    }

    SynthesisResult res = synthesize_overlays(raw, queries, syn);
    LoadedData d;
    d.graph = std::move(res.graph);
    d.overlays = std::move(res.overlays);
    CorenessTree idx = build_coreness_tree(d.graph);

    BenchConfig bench;
    bench.ks = parse_uint_list(ks_csv, "k");
    bench.algos = parse_algos(algos_csv);
    bench.search = search;
    bench.threads = threads;
    return run_bench_pipeline(d, idx, queries, bench, ground_truth_path, out_csv, out_json, "");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"attributed community search on public-private graphs"};
    app.require_subcommand(1);

    CommonPaths paths;
    SearchOptions search;
    SynthesisConfig syn;
    std::string output, query_path, ks_csv = "3", algos_csv = "ppfp";
    std::string ground_truth_path, out_csv, out_json, plot_dir, algo_str = "ppfp";
    std::string output_format = "json";
    std::string out_overlays, out_edges, out_attrs;
    std::uint64_t ext_q = 0;
    std::uint32_t k = 3;
    std::size_t num_queries = 100;
    int threads = 1;

    auto add_search_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--allow-plain-core", search.allow_plain_core,
                      "fall back to the plain connected k-core when no attribute-sharing "
                      "community exists");
        cmd->add_flag("--strict-paper-mode", search.strict_paper_mode,
                      "disable the within-size early exit in online-basic");
        cmd->add_flag("--conditional-support-merged", search.conditional_support_merged,
                      "use merged support for the conditional-tree path-length requirement");
    };

    auto* build = app.add_subcommand("build-index", "build and serialize the coreness tree index");
    add_graph_options(build, paths, false);
    build->add_option("--output", output, "output index path")->required();

    auto* query = app.add_subcommand("query", "run one community search query");
    add_graph_options(query, paths, true, true);
    query->add_option("--query", ext_q, "query vertex id")->required();
    query->add_option("--k", k, "core parameter")->check(CLI::PositiveNumber);
    query->add_option("--algo", algo_str, "basic|binary|ppfp");
    query->add_option("--output-format", output_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_search_flags(query);

    auto* gen = app.add_subcommand("gen-private", "synthesize private overlays from a public graph");
    add_graph_options(gen, paths, false);
    gen->add_option("--queries", query_path, "query vertex file")->required();
    gen->add_option("--seed", syn.seed, "random seed");
    gen->add_option("--edge-fraction", syn.edge_fraction, "fraction of incident edges to privatize")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--attrs-min", syn.attrs_min, "min private attributes per query");
    gen->add_option("--attrs-max", syn.attrs_max, "max private attributes per query");
    gen->add_option("--noise-fraction", syn.noise_node_fraction, "fraction of nodes given a noise attribute")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--out-overlays", out_overlays, "output overlay file")->required();
    gen->add_option("--out-edges", out_edges, "output reduced public edge file")->required();
    gen->add_option("--out-attrs", out_attrs, "output reduced public attribute file")->required();

    auto* bench = app.add_subcommand("bench", "run a query benchmark sweep");
    add_graph_options(bench, paths, true, true);
    bench->add_option("--queries", query_path, "query vertex file")->required();
    bench->add_option("--ks", ks_csv, "comma-separated k values");
    bench->add_option("--algos", algos_csv, "comma-separated algorithms");
    bench->add_option("--ground-truth", ground_truth_path, "ground-truth community file");
    bench->add_option("--out-csv", out_csv, "per-cell CSV output");
    bench->add_option("--out-json", out_json, "JSON summary output");
    bench->add_option("--threads", threads, "concurrent query cells");
    bench->add_option("--emit-plots", plot_dir, "write plot data files into this directory");
    add_search_flags(bench);

    auto* eval = app.add_subcommand("eval", "synthesize private data, build index, and benchmark");
    add_graph_options(eval, paths, false);
    eval->add_option("--queries", query_path, "query vertex file (sampled when omitted)");
    eval->add_option("--num-queries", num_queries, "queries to sample when no file given");
    eval->add_option("--seed", syn.seed, "random seed");
    eval->add_option("--edge-fraction", syn.edge_fraction, "fraction of incident edges to privatize")
        ->check(CLI::Range(0.0, 1.0));
    eval->add_option("--attrs-min", syn.attrs_min, "min private attributes per query");
    eval->add_option("--attrs-max", syn.attrs_max, "max private attributes per query");
    eval->add_option("--noise-fraction", syn.noise_node_fraction, "fraction of nodes given a noise attribute")
        ->check(CLI::Range(0.0, 1.0));
    eval->add_option("--ks", ks_csv, "comma-separated k values");
    eval->add_option("--algos", algos_csv, "comma-separated algorithms");
    eval->add_option("--ground-truth", ground_truth_path, "ground-truth community file");
    eval->add_option("--out-csv", out_csv, "per-cell CSV output");
    eval->add_option("--out-json", out_json, "JSON summary output");
    eval->add_option("--threads", threads, "concurrent query cells");
    add_search_flags(eval);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (build->parsed()) return cmd_build_index(paths, output);
        if (query->parsed()) return cmd_query(paths, ext_q, k, algo_str, search, output_format);
        if (gen->parsed())
            return cmd_gen_private(paths, query_path, syn, out_overlays, out_edges, out_attrs);
        if (bench->parsed())
            return cmd_bench(paths, query_path, ks_csv, algos_csv, search, threads,
                             ground_truth_path, out_csv, out_json, plot_dir);
        if (eval->parsed())
            return cmd_eval(paths, query_path, num_queries, syn, ks_csv, algos_csv, search,
                            threads, ground_truth_path, out_csv, out_json);
    } catch (const NotFoundError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotFound;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}
