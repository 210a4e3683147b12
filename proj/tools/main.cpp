// Command-line surface: dimension queries, decomposition dumps, basis
// enumeration, construction evaluation, closed forms, generators, and the
// brute-vs-decomposition benchmark harness.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "locdim/bench.hpp"
#include "locdim/constructions.hpp"
#include "locdim/decomposition.hpp"
#include "locdim/dsl.hpp"
#include "locdim/edge_list.hpp"
#include "locdim/generators.hpp"
#include "locdim/graph.hpp"
#include "locdim/local_metric.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct CommonOptions {
    std::string input;
    std::string dsl;
    bool json = false;
    int threads = 0;  // 0 = unset, fall back to LOCDIM_THREADS or 1
    locdim::SearchLimits limits;
};

void add_graph_source(CLI::App* cmd, CommonOptions& opts) {
    auto* source = cmd->add_option_group("source");
    source->add_option("--input", opts.input, "edge-list file");
    source->add_option("--dsl", opts.dsl, "construction expression");
    source->require_option(1);
}

void add_limits(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--max-exact", opts.limits.max_exact, "brute-force search cap");
    cmd->add_option("--max-bases", opts.limits.max_bases, "basis enumeration cap");
}

int resolved_threads(const CommonOptions& opts) {
    if (opts.threads > 0) return opts.threads;
    if (const char* env = std::getenv("LOCDIM_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

locdim::Graph load_graph(const CommonOptions& opts, bool require_connected) {
    locdim::Graph g;
    if (!opts.dsl.empty()) {
        g = locdim::dsl::eval(locdim::dsl::parse(opts.dsl)).graph;
    } else if (!opts.input.empty()) {
        g = locdim::read_edge_list_file(opts.input);
    } else {
        throw locdim::Error("one of --input or --dsl is required");
    }
    if (require_connected && !locdim::is_connected(g)) throw locdim::DisconnectedError();
    return g;
}

locdim::VertexSet parse_vertex_list(const std::string& text, int n) {
    locdim::VertexSet s(n);
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        int v = std::stoi(item);
        if (v < 0 || v >= n) throw locdim::VertexOutOfRangeError(v, n);
        s.add(v);
    }
    return s;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out;
}

int run_dim(const CommonOptions& opts, const std::string& method) {
    auto g = load_graph(opts, true);
    auto start = Clock::now();
    locdim::DimResult result;
    if (method == "brute") {
        result = locdim::brute_force_dimension(g, opts.limits);
    } else {  // auto | decomp
        result = locdim::dim_via_decomposition(g, opts.limits, resolved_threads(opts));
    }
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
    if (opts.json) {
        std::cout << locdim::dim_result_json(g, result, us) << "\n";
    } else {
        std::cout << "dimension: " << result.dimension << "\n"
                  << "method: " << locdim::method_name(result.method) << "\n"
                  << "witness: " << join_ints(result.witness.to_vector()) << "\n"
                  << "time_us: " << us << "\n";
    }
    return 0;
}

int run_decompose(const CommonOptions& opts) {
    auto g = load_graph(opts, true);
    auto d = locdim::classify(g, locdim::blocks(g));
    if (opts.json) {
        nlohmann::json j;
        j["cut_vertices"] = d.cut_vertices.to_vector();
        j["blocks"] = nlohmann::json::array();
        for (size_t i = 0; i < d.blocks.size(); ++i) {
            nlohmann::json b;
            b["vertices"] = d.blocks[i].to_vector();
            b["non_bipartite"] = static_cast<bool>(d.non_bipartite[i]);
            b["attachment_set"] = d.attachment_sets[i].to_vector();
            j["blocks"].push_back(std::move(b));
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "cut vertices: " << join_ints(d.cut_vertices.to_vector()) << "\n";
    for (size_t i = 0; i < d.blocks.size(); ++i) {
        std::cout << "block " << i << ": {" << join_ints(d.blocks[i].to_vector()) << "} "
                  << (d.non_bipartite[i] ? "non-bipartite" : "bipartite")
                  << " attachments={" << join_ints(d.attachment_sets[i].to_vector()) << "}\n";
    }
    return 0;
}

int run_bases(const CommonOptions& opts) {
    auto g = load_graph(opts, true);
    auto family = locdim::enumerate_local_metric_bases(g, opts.limits);
    if (opts.json) {
        nlohmann::json j;
        j["dimension"] = family.bases.empty() ? 0 : family.bases.front().size();
        j["bases"] = nlohmann::json::array();
        for (const auto& b : family.bases) j["bases"].push_back(b.to_vector());
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "dimension: " << (family.bases.empty() ? 0 : family.bases.front().size())
              << "\n";
    for (const auto& b : family.bases) std::cout << "{" << join_ints(b.to_vector()) << "}\n";
    return 0;
}

int run_rho(const CommonOptions& opts, const std::string& constraint) {
    auto g = load_graph(opts, true);
    auto anchors = parse_vertex_list(constraint, g.order());
    auto result = locdim::min_completion(g, anchors, opts.limits);
    if (opts.json) {
        nlohmann::json j;
        j["constraint"] = anchors.to_vector();
        j["rho"] = result.size;
        j["witness"] = result.witness.to_vector();
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "rho: " << result.size << "\n"
              << "witness: " << join_ints(result.witness.to_vector()) << "\n";
    return 0;
}

int run_construct(const CommonOptions& opts) {
    if (opts.dsl.empty()) throw locdim::Error("construct requires --dsl");
    auto result = locdim::dsl::eval(locdim::dsl::parse(opts.dsl));
    locdim::write_edge_list(std::cout, result.graph);
    return 0;
}

int run_closed_form(const CommonOptions& opts, const std::string& kind, bool verify) {
    if (opts.dsl.empty()) throw locdim::Error("closed-form requires --dsl");
    auto ast = locdim::dsl::parse(opts.dsl);
    using locdim::dsl::Kind;
    int value = 0;
    if (kind == "rooted") {
        if (ast->kind == Kind::RootedUniform) {
            auto base = locdim::dsl::eval(ast->children[0]).graph;
            auto factor = locdim::dsl::eval(ast->children[1]).graph;
            value = locdim::closed_form_rooted_uniform(base.order(), factor, ast->roots[0],
                                                       &base, opts.limits);
        } else if (ast->kind == Kind::Rooted) {
            std::vector<locdim::Graph> factors;
            for (size_t i = 1; i < ast->children.size(); ++i)
                factors.push_back(locdim::dsl::eval(ast->children[i]).graph);
            value = locdim::closed_form_rooted_sequence(factors, ast->roots, opts.limits);
        } else {
            throw locdim::Error("--kind rooted needs a rooted(...) expression");
        }
    } else if (kind == "corona") {
        if (ast->kind == Kind::CoronaUniform) {
            auto base = locdim::dsl::eval(ast->children[0]).graph;
            auto factor = locdim::dsl::eval(ast->children[1]).graph;
            value = locdim::closed_form_corona_uniform(base.order(), factor, opts.limits);
        } else if (ast->kind == Kind::Corona) {
            std::vector<locdim::Graph> factors;
            for (size_t i = 1; i < ast->children.size(); ++i)
                factors.push_back(locdim::dsl::eval(ast->children[i]).graph);
            value = locdim::closed_form_corona_sequence(factors, opts.limits);
        } else {
            throw locdim::Error("--kind corona needs a corona(...) expression");
        }
    } else if (kind == "block") {
        auto g = locdim::dsl::eval(ast).graph;
        auto d = locdim::classify(g, locdim::blocks(g));
        std::vector<locdim::BlockGraphBlock> metas;
        for (size_t j = 0; j < d.blocks.size(); ++j) {
            auto view = locdim::block_view(g, d, static_cast<int>(j));
            int order = view.subgraph.order();
            if (view.subgraph.edge_count() != order * (order - 1) / 2)
                throw locdim::BadSpecError("block " + std::to_string(j) + " is not a clique");
            int cuts = static_cast<int>(d.block_cuts[j].size());
            metas.push_back({order, cuts, cuts == order});
        }
        value = locdim::closed_form_block_graph(metas);
    } else if (kind == "bouquet") {
        if (ast->kind != Kind::Bouquet)
            throw locdim::Error("--kind bouquet needs a bouquet(...) expression");
        std::vector<locdim::Graph> parts;
        for (const auto& c : ast->children) parts.push_back(locdim::dsl::eval(c).graph);
        value = locdim::closed_form_bouquet(parts, ast->roots, opts.limits);
    } else if (kind == "chain") {
        if (ast->kind != Kind::Chain)
            throw locdim::Error("--kind chain needs a chain(...) expression");
        locdim::ChainSpec spec;
        for (const auto& c : ast->children) spec.parts.push_back(locdim::dsl::eval(c).graph);
        spec.links = ast->links;
        value = locdim::closed_form_chain(spec, opts.limits);
    } else {
        throw locdim::Error("unknown --kind '" + kind + "'");
    }

    int engine = -1;
    bool match = true;
    if (verify) {
        auto g = locdim::dsl::eval(ast).graph;
        engine = locdim::dim_via_decomposition(g, opts.limits, resolved_threads(opts)).dimension;
        match = engine == value;
    }
    if (opts.json) {
        nlohmann::json j;
        j["kind"] = kind;
        j["value"] = value;
        if (verify) {
            j["engine"] = engine;
            j["match"] = match;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "closed-form: " << value << "\n";
        if (verify)
            std::cout << "engine: " << engine << "\n"
                      << "match: " << (match ? "yes" : "no") << "\n";
    }
    return match ? 0 : 2;
}

struct GenOptions {
    std::string family = "random";
    int n = 8;
    double p = 0.3;
    int blocks = 3;
    int max_order = 4;
    int parts = 3;
    std::uint64_t seed = 0;
};

void add_gen_options(CLI::App* cmd, GenOptions& opts) {
    cmd->add_option("--family", opts.family,
                    "random | unicyclic | block-graph | chain-of | cactus");
    cmd->add_option("--n", opts.n, "vertex count");
    cmd->add_option("--p", opts.p, "edge probability (random)");
    cmd->add_option("--blocks", opts.blocks, "block count (block-graph)");
    cmd->add_option("--max-order", opts.max_order, "max part/block order");
    cmd->add_option("--parts", opts.parts, "part count (chain-of)");
    cmd->add_option("--seed", opts.seed, "generator seed");
}

locdim::GeneratorConfig to_config(const GenOptions& opts) {
    locdim::GeneratorConfig c;
    using Family = locdim::GeneratorConfig::Family;
    if (opts.family == "random" || opts.family == "random-connected")
        c.family = Family::RandomConnected;
    else if (opts.family == "unicyclic")
        c.family = Family::Unicyclic;
    else if (opts.family == "block-graph")
        c.family = Family::BlockGraph;
    else if (opts.family == "chain-of")
        c.family = Family::ChainOf;
    else if (opts.family == "cactus")
        c.family = Family::Cactus;
    else
        throw locdim::BadConfigError("unknown family '" + opts.family + "'");
    c.n = opts.n;
    c.edge_prob = opts.p;
    c.blocks = opts.blocks;
    c.max_order = opts.max_order;
    c.parts = opts.parts;
    c.seed = opts.seed;
    return c;
}

int run_bench(const CommonOptions& opts, const GenOptions& gen, int count, bool compare) {
    std::vector<locdim::BenchMethod> methods{locdim::BenchMethod::Decomposition};
    if (compare) methods.insert(methods.begin(), locdim::BenchMethod::Brute);
    nlohmann::json all = nlohmann::json::array();
    bool agreement = true;
    if (!opts.json)
        std::cout << "instance\tn\tm\tmethod\tdimension\ttime_us\n";
    for (int i = 0; i < count; ++i) {
        auto config = to_config(gen);
        config.seed = gen.seed + static_cast<std::uint64_t>(i);
        auto g = locdim::generate(config);
        auto report =
            locdim::bench_compare(g, methods, opts.limits, resolved_threads(opts),
                                  gen.family + "-" + std::to_string(config.seed), config.seed);
        agreement = agreement && report.agreement;
        if (opts.json) {
            all.push_back(nlohmann::json::parse(locdim::report_json(report)));
        } else {
            for (const auto& run : report.runs) {
                std::cout << report.instance << "\t" << report.n << "\t" << report.m << "\t"
                          << run.method << "\t";
                if (run.ran)
                    std::cout << run.dimension << "\t" << run.time_us << "\n";
                else
                    std::cout << "-\t(" << run.note << ")\n";
            }
            if (!report.agreement) std::cout << report.instance << "\tDISAGREEMENT\n";
        }
    }
    if (opts.json) std::cout << all.dump() << "\n";
    return agreement ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local metric dimension toolkit"};
    app.require_subcommand(1);

    CommonOptions dim_opts, dec_opts, bases_opts, rho_opts, con_opts, cf_opts, bench_opts;
    std::string dim_method = "auto";
    std::string rho_constraint;
    std::string cf_kind;
    bool cf_verify = false;
    GenOptions gen_opts, bench_gen;
    int bench_count = 1;
    bool bench_compare_flag = false;

    auto* dim = app.add_subcommand("dim", "compute the local metric dimension");
    add_graph_source(dim, dim_opts);
    add_limits(dim, dim_opts);
    dim->add_option("--method", dim_method, "auto | brute | decomp")
        ->check(CLI::IsMember({"auto", "brute", "decomp"}));
    dim->add_flag("--json", dim_opts.json, "machine-readable output");
    dim->add_option("--threads", dim_opts.threads, "parallel per-block solves");

    auto* dec = app.add_subcommand("decompose", "print blocks, cut vertices, and flags");
    add_graph_source(dec, dec_opts);
    dec->add_flag("--json", dec_opts.json);

    auto* bases = app.add_subcommand("bases", "enumerate all local metric bases");
    add_graph_source(bases, bases_opts);
    add_limits(bases, bases_opts);
    bases->add_flag("--json", bases_opts.json);

    auto* rho = app.add_subcommand("rho", "minimum completion of a required vertex set");
    add_graph_source(rho, rho_opts);
    add_limits(rho, rho_opts);
    rho->add_option("--constraint", rho_constraint, "comma-separated vertices, e.g. 0,3,7");
    rho->add_flag("--json", rho_opts.json);

    auto* con = app.add_subcommand("construct", "evaluate a DSL expression to an edge list");
    con->add_option("--dsl", con_opts.dsl, "construction expression")->required();

    auto* cf = app.add_subcommand("closed-form", "evaluate a product/attachment closed form");
    cf->add_option("--kind", cf_kind, "rooted | corona | block | bouquet | chain")->required();
    cf->add_option("--dsl", cf_opts.dsl, "construction expression")->required();
    cf->add_flag("--verify", cf_verify, "triangulate against the engine");
    cf->add_flag("--json", cf_opts.json);
    add_limits(cf, cf_opts);

    auto* bench = app.add_subcommand("bench", "generate instances and time the methods");
    add_gen_options(bench, bench_gen);
    bench->add_option("--count", bench_count, "instances (seeds seed..seed+count-1)");
    bench->add_flag("--compare", bench_compare_flag, "also run whole-graph brute force");
    bench->add_flag("--json", bench_opts.json);
    bench->add_option("--threads", bench_opts.threads, "parallel per-block solves");
    add_limits(bench, bench_opts);

    auto* gen = app.add_subcommand("gen", "emit one generated instance as an edge list");
    add_gen_options(gen, gen_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (dim->parsed()) return run_dim(dim_opts, dim_method);
        if (dec->parsed()) return run_decompose(dec_opts);
        if (bases->parsed()) return run_bases(bases_opts);
        if (rho->parsed()) return run_rho(rho_opts, rho_constraint);
        if (con->parsed()) return run_construct(con_opts);
        if (cf->parsed()) return run_closed_form(cf_opts, cf_kind, cf_verify);
        if (bench->parsed()) return run_bench(bench_opts, bench_gen, bench_count,
                                              bench_compare_flag);
        if (gen->parsed()) {
            locdim::write_edge_list(std::cout, locdim::generate(to_config(gen_opts)));
            return 0;
        }
    } catch (const locdim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
