#include "gridminor/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gridminor/bench.hpp"
#include "gridminor/embed_faulty.hpp"
#include "gridminor/embedding.hpp"
#include "gridminor/graphio.hpp"
#include "gridminor/minors.hpp"
#include "gridminor/treewidth.hpp"
#include "gridminor/verify.hpp"

namespace gridminor::cli {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    file << text;
}

FaultAlgorithm parse_algorithm(const std::string& name) {
    if (name == "greedy") return FaultAlgorithm::Greedy;
    if (name == "fallback") return FaultAlgorithm::Fallback;
    throw CLI::ValidationError("--algorithm", "must be greedy or fallback");
}

Scheme parse_scheme(const std::string& name) {
    if (name == "single") return Scheme::Single;
    if (name == "flip-drop") return Scheme::FlipDrop;
    throw CLI::ValidationError("--scheme", "must be single or flip-drop");
}

std::vector<int> read_dead_list(const std::string& path, std::istream& in) {
    std::istringstream text(slurp(path, in));
    std::vector<int> ids;
    int v = 0;
    while (text >> v) ids.push_back(v);
    if (!text.eof()) throw std::runtime_error("dead list must contain only integers");
    return ids;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"gridminor: minor embedding into grids of complete bipartite cells"};
    app.require_subcommand(1);

    // gen-fabric
    auto* gen = app.add_subcommand("gen-fabric", "emit a fabric file, optionally faulted");
    int gen_m = 0, gen_c = 0;
    double fail_rate = -1.0;
    uint64_t seed = 0;
    std::string dead_list_path, gen_out = "-";
    gen->add_option("--m", gen_m, "grid dimension")->required();
    gen->add_option("--c", gen_c, "half-cell size")->required();
    auto* rate_opt = gen->add_option("--fail-rate", fail_rate,
                                     "fraction of vertices to fail, in [0,1]");
    gen->add_option("--seed", seed, "fault sampling seed")->needs(rate_opt);
    gen->add_option("--dead-list", dead_list_path, "file of vertex ids to fail")
        ->excludes(rate_opt);
    gen->add_option("-o,--output", gen_out, "output path ('-' for stdout)");

    // embed
    auto* embed = app.add_subcommand("embed", "embed the largest complete graph");
    std::string embed_fabric = "-", embed_out = "-";
    std::string embed_alg = "greedy", embed_scheme = "flip-drop";
    bool greedy_cross = false;
    embed->add_option("--fabric", embed_fabric, "fabric file ('-' for stdin)");
    embed->add_option("--algorithm", embed_alg, "greedy or fallback");
    embed->add_option("--scheme", embed_scheme, "single or flip-drop");
    embed->add_flag("--greedy-cross", greedy_cross,
                    "allow cross-diagonal pair-ups in the greedy algorithm");
    embed->add_option("-o,--output", embed_out, "output path");

    // verify
    auto* verify = app.add_subcommand("verify", "validate an embedding file");
    std::string verify_fabric = "-", verify_embedding, verify_problem;
    int clique_n = 0;
    verify->add_option("--fabric", verify_fabric, "fabric file")->required();
    verify->add_option("--embedding", verify_embedding, "embedding file")->required();
    auto* clique_opt = verify->add_option("--clique", clique_n, "verify against K_n");
    verify->add_option("--problem", verify_problem, "verify against a graph file")
        ->excludes(clique_opt);

    // treewidth
    auto* tw = app.add_subcommand("treewidth", "treewidth bounds for F(m,c)");
    int tw_m = 0, tw_c = 0;
    std::string td_out;
    tw->add_option("--m", tw_m, "grid dimension")->required();
    tw->add_option("--c", tw_c, "half-cell size")->required();
    tw->add_option("--emit-decomposition", td_out, "write the explicit decomposition here");

    // screen
    auto* screen = app.add_subcommand("screen", "embeddability screening for a problem graph");
    std::string screen_problem_path = "-";
    int screen_m = 0, screen_c = 0;
    bool expect_embeddable = false;
    screen->add_option("--problem", screen_problem_path, "problem graph file");
    screen->add_option("--m", screen_m, "grid dimension")->required();
    screen->add_option("--c", screen_c, "half-cell size")->required();
    screen->add_flag("--expect-embeddable", expect_embeddable,
                     "exit 1 if the verdict is a rejection");

    // minors
    auto* minors_cmd = app.add_subcommand("minors", "maximal-minor catalog of a small graph");
    std::string minors_graph = "-", catalog_out, embed_problem;
    minors_cmd->add_option("--graph", minors_graph, "host graph file");
    minors_cmd->add_option("--catalog", catalog_out, "write the catalog here");
    minors_cmd->add_option("--embed", embed_problem,
                           "embed this problem graph via the catalog");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte Carlo fault-resilience sweep");
    std::string sim_config, sim_out = "-";
    sim->add_option("--config", sim_config, "experiment config file")->required();
    sim->add_option("-o,--output", sim_out, "CSV output path");

    std::vector<const char*> argv{"gridminor"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            Fabric f(gen_m, gen_c);
            if (fail_rate >= 0.0) f = f.with_random_faults(fail_rate, seed);
            if (!dead_list_path.empty()) f = f.with_dead(read_dead_list(dead_list_path, in));
            emit(gen_out, write_fabric(f), out);
            return 0;
        }
        if (embed->parsed()) {
            Fabric f = read_fabric(slurp(embed_fabric, in));
            EmbeddingRecord rec;
            if (f.is_perfect()) {
                rec = to_record(embed_clique_perfect(f.m(), f.c()), "clique");
            } else {
                FaultyResult r = orchestrate(f, parse_algorithm(embed_alg),
                                             parse_scheme(embed_scheme), greedy_cross);
                rec = to_record(r.embedding, provenance_string(r.provenance));
            }
            emit(embed_out, write_embedding(rec), out);
            return 0;
        }
        if (verify->parsed()) {
            Fabric f = read_fabric(slurp(verify_fabric, in));
            EmbeddingRecord rec = read_embedding(slurp(verify_embedding, in));
            if (rec.m != f.m() || rec.c != f.c())
                throw std::runtime_error("embedding was produced for F(" +
                                         std::to_string(rec.m) + "," + std::to_string(rec.c) +
                                         "), fabric is F(" + std::to_string(f.m()) + "," +
                                         std::to_string(f.c()) + ")");
            Graph problem;
            if (clique_opt->count() > 0) {
                if (clique_n < 1) throw std::runtime_error("--clique requires n >= 1");
                problem = complete_graph(clique_n);
            } else if (!verify_problem.empty()) {
                problem = read_graph(slurp(verify_problem, in)).graph;
            } else {
                throw std::runtime_error("verify needs --clique or --problem");
            }
            VerificationReport report = verify_minor_embedding(f, problem, rec.chains);
            out << report.render();
            return report.pass ? 0 : 1;
        }
        if (tw->parsed()) {
            auto [lo, hi] = treewidth_bounds(tw_m, tw_c);
            out << "bounds " << lo << " " << hi << "\n";
            if (!td_out.empty())
                emit(td_out, write_tree_decomposition(build_tree_decomposition(tw_m, tw_c)),
                     out);
            return 0;
        }
        if (screen->parsed()) {
            ProblemGraph p = read_graph(slurp(screen_problem_path, in));
            ScreeningVerdict verdict = screen_problem(p, screen_m, screen_c);
            switch (verdict.verdict) {
                case Screening::Rejected: out << "REJECTED " << verdict.reason << "\n"; break;
                case Screening::EmbeddableByConstruction:
                    out << "EMBEDDABLE " << verdict.reason << "\n";
                    break;
                case Screening::Unknown: out << "UNKNOWN " << verdict.reason << "\n"; break;
            }
            return (expect_embeddable && verdict.verdict == Screening::Rejected) ? 1 : 0;
        }
        if (minors_cmd->parsed()) {
            Graph g = read_graph(slurp(minors_graph, in)).graph;
            MinorCatalog cat = enumerate_maximal_minors(g);
            if (!catalog_out.empty()) emit(catalog_out, write_catalog(cat), out);
            if (!embed_problem.empty()) {
                Graph p = read_graph(slurp(embed_problem, in)).graph;
                if (auto chains = embed_via_catalog(p, cat)) {
                    std::string text = "chains " + std::to_string(chains->size()) + "\n";
                    for (size_t k = 0; k < chains->size(); ++k) {
                        text += "node " + std::to_string(k + 1) + ":";
                        for (int v : (*chains)[k]) text += " " + std::to_string(v);
                        text += "\n";
                    }
                    out << text;
                } else {
                    out << "none\n";
                }
            } else if (catalog_out.empty()) {
                out << write_catalog(cat);
            }
            return 0;
        }
        if (sim->parsed()) {
            ExperimentConfig cfg = parse_config(slurp(sim_config, in));
            emit(sim_out, write_csv(run_trials(cfg), cfg.histograms), out);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace gridminor::cli
