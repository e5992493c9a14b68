// hypersparse - batch CLI: generate instances, sparsify, decompose, evaluate,
// run the cut-compression demo. Reports are JSON ("schema": "hypersparse/1");
// set HYPERSPARSE_LOG to error|info|debug for stderr verbosity.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypersparse/decomposition.hpp"
#include "hypersparse/directed_sparsify.hpp"
#include "hypersparse/generators.hpp"
#include "hypersparse/io.hpp"
#include "hypersparse/lowerbound.hpp"
#include "hypersparse/oracle.hpp"
#include "hypersparse/overlap.hpp"
#include "hypersparse/pipeline.hpp"
#include "hypersparse/rng.hpp"

using nlohmann::json;
using namespace hypersparse;

namespace {

int log_level() {
    const char* env = std::getenv("HYPERSPARSE_LOG");
    if (!env) return 1;
    const std::string v(env);
    if (v == "error") return 0;
    if (v == "debug") return 2;
    return 1;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "[debug] " << msg << "\n";
}

json base_report(const std::string& command, std::uint64_t seed) {
    return json{{"schema", "hypersparse/1"}, {"command", command}, {"seed", seed}};
}

void write_report(const std::string& path, const json& report) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report file: " + path);
    out << report.dump(2) << "\n";
    log_info("report written to " + path);
}

void write_csv(const std::string& path, const json& report) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write csv file: " + path);
    out << "key,value\n";
    for (auto it = report.begin(); it != report.end(); ++it) {
        if (it.value().is_number() || it.value().is_boolean() || it.value().is_string())
            out << it.key() << "," << it.value().dump() << "\n";
    }
}

// Rebuilds sparsifier entries from a weighted edge-subset file by matching
// each of its edges to an unused parent edge with the same vertex list.
Sparsifier match_entries(const Hypergraph& parent, const Hypergraph& sub) {
    std::multimap<std::vector<Vertex>, std::size_t> pool;
    for (std::size_t e = 0; e < parent.edge_count(); ++e) {
        auto key = parent.edge(e).vertices;
        std::sort(key.begin(), key.end());
        pool.insert({std::move(key), e});
    }
    Sparsifier sp;
    for (const auto& e : sub.edges()) {
        auto key = e.vertices;
        std::sort(key.begin(), key.end());
        auto it = pool.find(key);
        if (it == pool.end())
            throw std::runtime_error("sparsifier contains an edge absent from the input");
        sp.entries.push_back({it->second, e.weight});
        pool.erase(it);
    }
    std::sort(sp.entries.begin(), sp.entries.end(),
              [](const auto& a, const auto& b) { return a.edge_index < b.edge_index; });
    return sp;
}

json rs_to_json(const RSGraph& g) {
    json matchings = json::array();
    for (const auto& m : g.matchings) {
        json edges = json::array();
        for (auto [u, v] : m) edges.push_back({u, v});
        matchings.push_back(edges);
    }
    return json{{"schema", "hypersparse/1"}, {"n", g.n}, {"matchings", matchings}};
}

RSGraph rs_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matching family file: " + path);
    json j = json::parse(in);
    RSGraph g;
    g.n = j.at("n").get<std::size_t>();
    for (const auto& m : j.at("matchings")) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : m) edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
        g.matchings.push_back(std::move(edges));
    }
    if (auto bad = validate_rs(g)) throw std::runtime_error("invalid matching family: " + *bad);
    return g;
}

std::vector<bool> parse_bits(const std::string& bits) {
    std::vector<bool> s;
    s.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::runtime_error("bit string must be over {0,1}");
        s.push_back(c == '1');
    }
    return s;
}

int run(int argc, char** argv) {
    CLI::App app{"hypergraph spectral sparsification toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string gen_model = "random", gen_out = "out.hgr";
    std::size_t gen_n = 12, gen_m = 80, gen_r = 3, gen_block_n = 6, gen_block_m = 20,
                gen_half = 5, gen_side = 2;
    std::uint64_t gen_seed = 0;
    gen->add_option("--model", gen_model,
                    "complete | random | bridge | bipartite | random-directed")
        ->check(CLI::IsMember({"complete", "random", "bridge", "bipartite", "random-directed"}));
    gen->add_option("-n", gen_n, "vertex count");
    gen->add_option("-m", gen_m, "edge count");
    gen->add_option("-r", gen_r, "edge size");
    gen->add_option("--block-n", gen_block_n, "bridge model: vertices per block");
    gen->add_option("--block-m", gen_block_m, "bridge model: edges per block");
    gen->add_option("--half-n", gen_half, "bipartite model: vertices per side");
    gen->add_option("--max-side", gen_side, "random-directed: max tail/head size");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("-o,--output", gen_out, "output path");

    // sparsify
    auto* sparsify_cmd = app.add_subcommand("sparsify", "sparsify a hypergraph");
    std::string sp_in, sp_out = "sparsifier.hgr", sp_report;
    double sp_eps = 0.5, sp_lambda_c = 1.0, sp_p_c = 1.0;
    std::size_t sp_delay = 0;
    std::uint64_t sp_seed = 0;
    bool sp_directed = false;
    sparsify_cmd->add_option("input", sp_in, "input .hgr/.dhgr file")->required();
    sparsify_cmd->add_option("--eps", sp_eps, "target relative error");
    sparsify_cmd->add_option("--seed", sp_seed, "rng seed");
    sparsify_cmd->add_option("--lambda-c", sp_lambda_c, "sampling intensity multiplier");
    sparsify_cmd->add_option("--p-c", sp_p_c, "directed keep-rate multiplier");
    sparsify_cmd->add_option("--delay", sp_delay, "contraction delay (0 = default)");
    sparsify_cmd->add_flag("--directed", sp_directed, "input is a directed hypergraph");
    sparsify_cmd->add_option("-o,--output", sp_out, "sparsifier output path");
    sparsify_cmd->add_option("--report", sp_report, "JSON run report path");

    // decompose
    auto* decompose_cmd = app.add_subcommand("decompose", "expander decomposition");
    std::string dc_in, dc_report;
    std::uint64_t dc_seed = 0;
    decompose_cmd->add_option("input", dc_in, "input .hgr file")->required();
    decompose_cmd->add_option("--seed", dc_seed, "rng seed");
    decompose_cmd->add_option("--report", dc_report, "JSON report path");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "compare a sparsifier against its input");
    std::string ev_in, ev_sp, ev_report, ev_csv;
    double ev_eps = 0.5;
    bool ev_all_cuts = false;
    std::size_t ev_vectors = 0, ev_jobs = 1;
    std::uint64_t ev_seed = 0;
    eval_cmd->add_option("input", ev_in, "original .hgr file")->required();
    eval_cmd->add_option("sparsifier", ev_sp, "sparsifier .hgr file")->required();
    eval_cmd->add_option("--eps", ev_eps, "allowed relative error");
    eval_cmd->add_flag("--all-cuts", ev_all_cuts, "enumerate all cuts (n <= 20)");
    eval_cmd->add_option("--vectors", ev_vectors, "random centered vectors to sample");
    eval_cmd->add_option("--seed", ev_seed, "rng seed");
    eval_cmd->add_option("--jobs", ev_jobs, "worker threads");
    eval_cmd->add_option("--report", ev_report, "JSON report path");
    eval_cmd->add_option("--csv", ev_csv, "CSV summary path");

    // cheeger-check
    auto* cheeger_cmd = app.add_subcommand("cheeger-check", "verify the energy lower bound");
    std::string ch_in, ch_report;
    std::uint64_t ch_seed = 0;
    cheeger_cmd->add_option("input", ch_in, "input .hgr file (n <= 20)")->required();
    cheeger_cmd->add_option("--seed", ch_seed, "test vector seed");
    cheeger_cmd->add_option("--report", ch_report, "JSON report path");

    // lowerbound
    auto* lb = app.add_subcommand("lowerbound", "cut-compression demo");
    lb->require_subcommand(1);
    auto* lb_gen = lb->add_subcommand("gen-rs", "generate an induced-matching family");
    std::size_t lb_n = 24, lb_t = 3, lb_a = 3;
    std::uint64_t lb_seed = 0;
    bool lb_blocks = false;
    std::string lb_out = "rs.json";
    lb_gen->add_option("--n", lb_n, "vertex count");
    lb_gen->add_option("--t", lb_t, "matching count");
    lb_gen->add_option("--a", lb_a, "matching size");
    lb_gen->add_option("--seed", lb_seed, "rng seed");
    lb_gen->add_flag("--blocks", lb_blocks, "use the disjoint-blocks preset");
    lb_gen->add_option("-o,--output", lb_out, "output path");

    auto* lb_enc = lb->add_subcommand("encode", "encode a bit string into a hypergraph");
    std::string enc_rs, enc_bits, enc_out = "encoded.hgr", enc_report;
    std::uint64_t enc_seed = 0;
    lb_enc->add_option("--rs", enc_rs, "matching family JSON")->required();
    lb_enc->add_option("--bits", enc_bits, "bit string (default: random of length 2ta)");
    lb_enc->add_option("--seed", enc_seed, "string seed when --bits is absent");
    lb_enc->add_option("-o,--output", enc_out, "encoded hypergraph path");
    lb_enc->add_option("--report", enc_report, "JSON report path");

    auto* lb_dec = lb->add_subcommand("decode", "decode queried coordinates via exact cuts");
    std::string dec_rs, dec_bits;
    std::vector<std::size_t> dec_q;
    lb_dec->add_option("--rs", dec_rs, "matching family JSON")->required();
    lb_dec->add_option("--bits", dec_bits, "bit string")->required();
    lb_dec->add_option("--q", dec_q, "queried coordinates");

    auto* lb_audit = lb->add_subcommand("audit", "error distribution over random trials");
    std::string au_rs, au_report;
    std::size_t au_trials = 200;
    std::uint64_t au_seed = 0;
    lb_audit->add_option("--rs", au_rs, "matching family JSON")->required();
    lb_audit->add_option("--trials", au_trials, "trial count");
    lb_audit->add_option("--seed", au_seed, "rng seed");
    lb_audit->add_option("--report", au_report, "JSON report path");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        log_info("effective seed: " + std::to_string(gen_seed));
        if (gen_model == "complete") {
            write_hypergraph_file(gen_out, complete_uniform(gen_n, gen_r));
        } else if (gen_model == "random") {
            write_hypergraph_file(gen_out, random_uniform(gen_n, gen_m, gen_r, gen_seed));
        } else if (gen_model == "bridge") {
            write_hypergraph_file(gen_out,
                                  planted_bridge(gen_block_n, gen_block_m, gen_r, gen_seed));
        } else if (gen_model == "bipartite") {
            write_directed_hypergraph_file(gen_out, bipartite_clique_directed(gen_half));
        } else {
            write_directed_hypergraph_file(gen_out,
                                           random_directed(gen_n, gen_m, gen_side, gen_seed));
        }
        log_info("wrote " + gen_out);
        return 0;
    }

    if (sparsify_cmd->parsed()) {
        log_info("effective seed: " + std::to_string(sp_seed));
        if (sp_directed) {
            auto d = read_directed_hypergraph_file(sp_in);
            DirectedSparsifyConfig cfg;
            cfg.epsilon = sp_eps;
            cfg.p_c = sp_p_c;
            cfg.seed = sp_seed;
            auto run = directed_sparsify_run(d, cfg);
            std::vector<Hyperarc> arcs;
            for (const auto& entry : run.sparsifier.entries) {
                Hyperarc a = d.arc(entry.edge_index);
                a.weight = entry.weight;
                arcs.push_back(std::move(a));
            }
            write_directed_hypergraph_file(sp_out,
                                           DirectedHypergraph(d.vertex_count(), arcs, true));
            auto assignment = overlap_peel(d);
            json report = base_report("sparsify", sp_seed);
            report["directed"] = true;
            report["epsilon"] = sp_eps;
            report["p_c"] = sp_p_c;
            report["input_arcs"] = d.arc_count();
            report["kept_arcs"] = run.sparsifier.size();
            report["inverse_overlap_sum"] = assignment.inverse_sum();
            report["inverse_overlap_bound"] =
                static_cast<double>(d.vertex_count()) * static_cast<double>(d.vertex_count());
            report["size_precondition_ok"] = run.size_precondition_ok;
            json bands = json::array();
            for (const auto& band : run.bands)
                bands.push_back({{"k", band.k},
                                 {"keep_rate", band.keep_rate},
                                 {"arc_count", band.arcs.size()}});
            report["bands"] = bands;
            write_report(sp_report, report);
        } else {
            auto h = read_hypergraph_file(sp_in);
            PipelineConfig cfg;
            cfg.epsilon = sp_eps;
            cfg.seed = sp_seed;
            cfg.delay = sp_delay;
            cfg.lambda_c = sp_lambda_c;
            auto run = sparsify_run(h, cfg);
            write_hypergraph_file(sp_out, run.sparsifier.materialize(h));
            auto census = cluster_census(run);
            json report = base_report("sparsify", sp_seed);
            report["directed"] = false;
            report["epsilon"] = sp_eps;
            report["lambda_c"] = sp_lambda_c;
            report["input_edges"] = h.edge_count();
            report["kept_edges"] = run.sparsifier.size();
            report["levels"] = run.levels.size();
            report["delay"] = run.delay;
            report["census_total"] = census.total_size;
            report["census_bound"] = census.bound;
            json levels = json::array();
            for (const auto& level : run.levels)
                levels.push_back({{"live", level.live_count},
                                  {"clusters", level.cluster_members.size()},
                                  {"supernodes", level.supernode_count},
                                  {"removed_to_next", level.removed_to_next.size()}});
            report["per_level"] = levels;
            write_report(sp_report, report);
            log_debug("pipeline levels: " + std::to_string(run.levels.size()));
        }
        log_info("wrote " + sp_out);
        return 0;
    }

    if (decompose_cmd->parsed()) {
        log_info("effective seed: " + std::to_string(dc_seed));
        auto h = read_hypergraph_file(dc_in);
        DecompositionConfig cfg;
        cfg.seed = dc_seed;
        auto d = expander_decomposition(h, cfg);
        auto audit = charge_audit(d, h);
        json report = base_report("decompose", dc_seed);
        report["clusters"] = json::array();
        for (const auto& cluster : d.clusters) {
            const char* cert = cluster.cert == CertLevel::BruteForce ? "brute-force"
                               : cluster.cert == CertLevel::LpSearch ? "lp-search"
                                                                     : "heuristic";
            report["clusters"].push_back({{"vertices", cluster.vertices},
                                          {"edge_count", cluster.edges.size()},
                                          {"certification", cert},
                                          {"phi_certificate", cluster.phi_certificate}});
        }
        report["discarded_vertices"] = d.discarded_vertices;
        report["removed_edges"] = d.removed_edges.size();
        report["audit"] = {{"total_weight", audit.total_weight},
                           {"peel_removed_weight", audit.peel_removed_weight},
                           {"cut_removed_weight", audit.cut_removed_weight},
                           {"peel_bound", audit.peel_bound},
                           {"charge_bound", audit.charge_bound},
                           {"within_half", audit.within_half}};
        write_report(dc_report, report);
        if (!audit.within_half) {
            std::cerr << "error: removed weight exceeds half the total\n";
            return 3;
        }
        return 0;
    }

    if (eval_cmd->parsed()) {
        log_info("effective seed: " + std::to_string(ev_seed));
        auto h = read_hypergraph_file(ev_in);
        auto sub = read_hypergraph_file(ev_sp);
        if (sub.vertex_count() != h.vertex_count())
            throw std::runtime_error("vertex counts differ between input and sparsifier");
        auto sp = match_entries(h, sub);
        oracle::EvalOptions opts;
        opts.epsilon = ev_eps;
        opts.all_cuts = ev_all_cuts;
        opts.sample_vectors = ev_vectors;
        opts.seed = ev_seed;
        opts.jobs = ev_jobs;
        auto q = oracle::evaluate_sparsifier(h, sp, opts);
        json report = base_report("eval", ev_seed);
        report["epsilon"] = ev_eps;
        report["sparsifier_size"] = q.sparsifier_size;
        report["violations"] = q.violations;
        report["zero_mismatches"] = q.zero_mismatches;
        report["worst_ratio_low"] = q.worst_ratio_low;
        report["worst_ratio_high"] = q.worst_ratio_high;
        report["mean_cut_ratio"] = q.mean_cut_ratio;
        report["cut_queries"] = q.cut_queries;
        report["vector_queries"] = q.vector_queries;
        std::cout << report.dump(2) << "\n";
        write_report(ev_report, report);
        write_csv(ev_csv, report);
        return 0;
    }

    if (cheeger_cmd->parsed()) {
        log_info("effective seed: " + std::to_string(ch_seed));
        auto h = read_hypergraph_file(ch_in);
        auto x = random_centered_vector(h, ch_seed);
        auto res = oracle::cheeger_check(h, x);
        json report = base_report("cheeger-check", ch_seed);
        report["phi"] = res.phi;
        report["precondition_ok"] = res.precondition_ok;
        report["lhs"] = res.lhs;
        report["rhs"] = res.rhs;
        report["slack"] = res.slack;
        report["pass"] = res.pass;
        std::cout << report.dump(2) << "\n";
        write_report(ch_report, report);
        return res.pass ? 0 : 4;
    }

    if (lb_gen->parsed()) {
        log_info("effective seed: " + std::to_string(lb_seed));
        RSGraph g = lb_blocks ? rs_disjoint_blocks(lb_t, lb_a)
                              : gen_rs_greedy(lb_n, lb_t, lb_a, lb_seed);
        std::ofstream out(lb_out);
        if (!out) throw std::runtime_error("cannot write " + lb_out);
        out << rs_to_json(g).dump(2) << "\n";
        log_info("wrote " + lb_out);
        return 0;
    }

    if (lb_enc->parsed()) {
        auto g = rs_from_json(enc_rs);
        const std::size_t ell = 2 * g.t() * g.a();
        std::vector<bool> s;
        if (enc_bits.empty()) {
            log_info("effective seed: " + std::to_string(enc_seed));
            for (std::size_t i = 0; i < ell; ++i) s.push_back(uniform01(enc_seed, i) < 0.5);
        } else {
            s = parse_bits(enc_bits);
        }
        auto inst = encode(g, s);
        write_hypergraph_file(enc_out, inst.h);
        json report = base_report("lowerbound-encode", enc_seed);
        std::string bits;
        for (bool b : s) bits.push_back(b ? '1' : '0');
        report["bits"] = bits;
        report["length"] = ell;
        report["hyperedges"] = inst.h.edge_count();
        write_report(enc_report, report);
        log_info("wrote " + enc_out);
        return 0;
    }

    if (lb_dec->parsed()) {
        auto g = rs_from_json(dec_rs);
        auto inst = encode(g, parse_bits(dec_bits));
        const long long est = decode(inst, dec_q, exact_cut_fn(inst));
        long long truth = 0;
        for (std::size_t i : dec_q) truth += inst.s.at(i) ? 1 : 0;
        json report = base_report("lowerbound-decode", 0);
        report["estimate"] = est;
        report["truth"] = truth;
        report["queried"] = dec_q.size();
        std::cout << report.dump(2) << "\n";
        return 0;
    }

    if (lb_audit->parsed()) {
        log_info("effective seed: " + std::to_string(au_seed));
        auto g = rs_from_json(au_rs);
        auto audit = audit_scs(g, au_trials, au_seed);
        json report = base_report("lowerbound-audit", au_seed);
        report["trials"] = audit.trials;
        report["mean_abs_error"] = audit.mean_abs_error;
        report["max_abs_error"] = audit.max_abs_error;
        report["p50_error"] = audit.p50_error;
        report["p90_error"] = audit.p90_error;
        report["bound"] = audit.bound;
        report["fraction_within_bound"] = audit.fraction_within_bound;
        report["min_p_degree"] = audit.min_p_degree;
        report["degree_one_systematic"] = audit.degree_one_systematic;
        std::cout << report.dump(2) << "\n";
        write_report(au_report, report);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
