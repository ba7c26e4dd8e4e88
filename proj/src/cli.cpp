#include "hcplab/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcplab/error.hpp"
#include "hcplab/exact.hpp"
#include "hcplab/graph.hpp"
#include "hcplab/models.hpp"
#include "hcplab/qtm.hpp"
#include "hcplab/walk.hpp"

namespace hcplab::cli {
namespace {

using Json = nlohmann::ordered_json;

// Probabilities and log values are printed rounded to 6 decimals.
Json fixed6(double x) {
    if (!std::isfinite(x)) return nullptr;
    const double r = std::round(x * 1e6) / 1e6;
    return r == 0 ? 0.0 : r;  // no "-0.0"
}

Json cycle_json(const std::optional<Cycle>& c) { return c ? Json(*c) : Json(nullptr); }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path + "'");
    f << text;
    if (!f) throw Error("failed writing '" + path + "'");
}

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::string record_path;
};

struct GenOptions {
    std::string family;
    int n = 0;
    double p = 0.5;
    int extra_edges = 0;
    int max_degree = 0;
    std::string degree_class;
    std::string out_path;
};

struct SolveOptions {
    std::string method = "brute";
    std::string graph_path;
    int cap = kHeldKarpDefaultCap;
};

struct WalkOptions {
    std::string graph_path;
    std::uint64_t trials = 10000;
    bool exact = false;
};

struct QtmCliOptions {
    std::string graph_path;
    std::string mode = "standard";
    std::string model = "collapse";
    std::uint64_t shots = 1000;
    std::string trace_path;
    int cap = kQtmDefaultCap;
};

struct ModelsOptions {
    std::string set = "all";
    std::vector<std::string> names;
    int n_min = 11;
    int n_max = 100;
    std::string format = "csv";
    bool crossovers = false;
    std::string out_path;
};

struct CheckOptions {
    std::string graph_path;
};

int cmd_gen(const GenOptions& o, const GlobalOptions& g, std::ostream& out) {
    Family family;
    int cap = o.max_degree;
    if (!o.degree_class.empty()) {
        const auto c = parse_degree_class(o.degree_class);
        if (!c) throw InfeasibleFamily("unknown degree class '" + o.degree_class + "'");
        if (cap == 0) cap = class_degree_cap(*c, o.n);
    }
    if (o.family == "complete") {
        family = family::Complete{};
    } else if (o.family == "cycle") {
        family = family::Cycle{};
    } else if (o.family == "gnp") {
        family = family::Gnp{o.p};
    } else if (o.family == "planted") {
        family = family::Planted{o.extra_edges, cap};
    } else if (o.family == "bounded") {
        if (cap == 0) throw InfeasibleFamily("bounded family needs --max-degree or --degree-class");
        family = family::Bounded{cap};
    } else {
        throw InfeasibleFamily("unknown family '" + o.family + "'");
    }
    const Graph graph = generate(family, o.n, g.seed);
    const std::string text = serialize_graph(graph);
    if (o.out_path.empty()) {
        out << text;
    } else {
        write_text(o.out_path, text);
        out << "n=" << graph.n() << " m=" << graph.edge_count() << " max_degree=" << graph.max_degree()
            << '\n';
    }
    return kExitOk;
}

int cmd_solve(const SolveOptions& o, std::ostream& out) {
    const Graph graph = read_graph_file(o.graph_path);
    HamiltonianCertificate cert;
    if (o.method == "brute") {
        cert = brute_force_hcp(graph);
    } else if (o.method == "held-karp") {
        cert = held_karp_hcp(graph, o.cap);
    } else {
        throw Error("unknown method '" + o.method + "'");
    }
    Json result;
    result["hamiltonian"] = cert.found;
    result["cycle"] = cert.found ? Json(cert.cycle) : Json(nullptr);
    result["method"] = o.method;
    result["nodes"] = graph.n();
    out << result.dump() << '\n';
    return cert.found ? kExitOk : kExitNo;
}

int cmd_walk(const WalkOptions& o, const GlobalOptions& g, std::ostream& out) {
    const Graph graph = read_graph_file(o.graph_path);
    if (o.trials == 0) throw Error("--trials must be at least 1");
    if (o.exact && graph.n() > kWalkTreeCap) throw TooLarge(graph.n(), kWalkTreeCap);
    const SuccessEstimate estimate = estimate_success(graph, o.trials, g.seed);
    Json result;
    result["trials"] = estimate.trials;
    result["hits"] = estimate.hits;
    result["empirical_p"] = fixed6(estimate.empirical_p);
    result["exact_p"] = o.exact ? fixed6(exact_success_probability(graph)) : Json(nullptr);
    result["band_3sigma"] = fixed6(estimate.band);
    out << result.dump() << '\n';
    return kExitOk;
}

int cmd_qtm(const QtmCliOptions& o, const GlobalOptions& g, std::ostream& out) {
    const Graph graph = read_graph_file(o.graph_path);
    QtmOptions options;
    if (o.mode == "standard") {
        options.mode = QtmMode::standard;
    } else if (o.mode == "interference") {
        options.mode = QtmMode::interference;
    } else {
        throw Error("unknown mode '" + o.mode + "'");
    }
    if (o.model == "collapse") {
        options.model = InterferenceModel::collapse;
    } else if (o.model == "strict") {
        options.model = InterferenceModel::strict;
    } else {
        throw Error("unknown interference model '" + o.model + "'");
    }
    options.seed = g.seed;
    options.cap = o.cap;
    std::ofstream trace;
    if (!o.trace_path.empty()) {
        trace.open(o.trace_path, std::ios::binary);
        if (!trace) throw Error("cannot write '" + o.trace_path + "'");
        options.trace = &trace;
    }
    const QtmRun result = run(graph, options);
    Engine shots_rng = make_engine(g.seed, "qtm.shots");
    std::uint64_t shots_hit = 0;
    for (std::uint64_t i = 0; i < o.shots; ++i) shots_hit += bernoulli(shots_rng, result.measurement.p_hit);

    Json json;
    json["p_H"] = fixed6(result.measurement.p_hit);
    json["p_NH"] = fixed6(result.measurement.p_no_hit);
    json["mode"] = o.mode;
    json["interference_model"] = o.mode == "interference" ? Json(o.model) : Json(nullptr);
    json["shots"] = o.shots;
    json["shots_H"] = shots_hit;
    json["witness"] = cycle_json(result.measurement.witness);
    out << json.dump() << '\n';
    return kExitOk;
}

struct CrossoverRow {
    std::string model;
    std::string baseline;
    std::optional<int> first_n;
    std::optional<int> reported_n;
};

std::vector<CrossoverRow> crossover_table(const std::vector<ComplexityModel>& models, int n_min, int n_max) {
    const std::vector<ComplexityModel> baselines = {brute_force_classic(), brute_force_quantum(),
                                                    best_classical(), best_quantum()};
    std::vector<CrossoverRow> rows;
    for (const auto& m : models) {
        if (!m.degree_class) continue;
        for (const auto& b : baselines) {
            CrossoverRow row{m.name, b.name, crossover(m, b, n_min, n_max), std::nullopt};
            if (m.name == "our_dlog10" && b.name == "b_f_quantum") row.reported_n = 60;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

int cmd_models(const ModelsOptions& o, std::ostream& out) {
    std::vector<ComplexityModel> models;
    if (o.names.empty()) {
        models = model_set(o.set);
    } else {
        for (const auto& name : o.names) models.push_back(find_model(name));
    }
    if (o.n_max < o.n_min) {
        throw DomainMismatch("--n-max " + std::to_string(o.n_max) + " is below --n-min " +
                             std::to_string(o.n_min));
    }
    for (const auto& m : models) {
        if (!m.in_domain(o.n_min)) {
            throw DomainMismatch("--n-min " + std::to_string(o.n_min) + " is below the domain of " + m.name +
                                 " (starts at " + std::to_string(m.domain_min) + ")");
        }
    }
    std::vector<CrossoverRow> rows;
    if (o.crossovers) rows = crossover_table(models, o.n_min, o.n_max);

    std::string text;
    if (o.format == "csv") {
        text = emit_curves_csv(models, o.n_min, o.n_max);
        if (o.crossovers) {
            text += "\n# crossovers\nmodel,baseline,first_n,reported_n\n";
            for (const auto& r : rows) {
                text += r.model + ',' + r.baseline + ',' + (r.first_n ? std::to_string(*r.first_n) : "") + ',' +
                        (r.reported_n ? std::to_string(*r.reported_n) : "") + '\n';
            }
        }
    } else if (o.format == "json") {
        text = emit_curves_json(models, o.n_min, o.n_max);
        if (o.crossovers) {
            Json table = Json::array();
            for (const auto& r : rows) {
                table.push_back({{"model", r.model},
                                 {"baseline", r.baseline},
                                 {"first_n", r.first_n ? Json(*r.first_n) : Json(nullptr)},
                                 {"reported_n", r.reported_n ? Json(*r.reported_n) : Json(nullptr)}});
            }
            Json wrapped;
            wrapped["curves"] = Json::parse(text);
            wrapped["crossovers"] = std::move(table);
            text = wrapped.dump() + '\n';
        }
    } else {
        throw Error("unknown format '" + o.format + "'");
    }
    if (o.out_path.empty()) {
        out << text;
    } else {
        write_text(o.out_path, text);
    }
    return kExitOk;
}

int cmd_check(const CheckOptions& o, std::ostream& out) {
    const Graph graph = read_graph_file(o.graph_path);
    const WalkConditions walk = check_conditions(graph);
    const auto degrees = graph.degrees();
    const GrowthConditions growth = check_growth_conditions(degrees);
    Json json;
    json["eq4"] = walk.below_n_over_e;
    json["eq5"] = walk.below_sqrt_n_over_e;
    json["eq6"] = walk.product_below_2n;
    json["eq7"] = walk.product_below_1728n;
    json["eq29"] = growth.below_log_n_power;
    json["eq30"] = growth.below_1728_2n;
    json["eq31"] = growth.below_2986_n;
    json["log10_degree_product"] = fixed6(growth.log10_product);
    out << json.dump() << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hamiltonian cycle laboratory: exact solvers, marked random walks, QTM simulation "
                 "and complexity curves"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--seed", global.seed, "Global seed; every random stream derives from it");
    app.add_option("--record", global.record_path, "Write a JSON run record (command, params, outputs, wall_ms)");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
    gen_cmd->add_option("--family", gen.family, "complete | cycle | gnp | planted | bounded")->required();
    gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
    gen_cmd->add_option("--p", gen.p, "Edge probability (gnp)");
    gen_cmd->add_option("--extra-edges", gen.extra_edges, "Chords added to the hidden cycle (planted)");
    gen_cmd->add_option("--max-degree", gen.max_degree, "Degree cap (bounded; optional for planted)");
    gen_cmd->add_option("--degree-class", gen.degree_class, "dmax | d20 | dlog | dlog10; sets the cap");
    gen_cmd->add_option("-o,--out", gen.out_path, "Output graph file");

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Decide Hamiltonicity exactly");
    solve_cmd->add_option("graph", solve.graph_path, "Graph file")->required();
    solve_cmd->add_option("--method", solve.method, "brute | held-karp");
    solve_cmd->add_option("--cap", solve.cap, "Held-Karp vertex cap");

    WalkOptions walk;
    auto* walk_cmd = app.add_subcommand("walk", "Marked random-walk trials");
    walk_cmd->add_option("graph", walk.graph_path, "Graph file")->required();
    walk_cmd->add_option("--trials", walk.trials, "Number of trials");
    walk_cmd->add_flag("--exact", walk.exact, "Also compute the exact success probability (n <= 12)");

    QtmCliOptions qtm;
    auto* qtm_cmd = app.add_subcommand("qtm", "Simulate the quantum Turing machine");
    qtm_cmd->add_option("graph", qtm.graph_path, "Graph file")->required();
    qtm_cmd->add_option("--mode", qtm.mode, "standard | interference");
    qtm_cmd->add_option("--interference-model", qtm.model, "collapse | strict");
    qtm_cmd->add_option("--shots", qtm.shots, "Measurement samples");
    qtm_cmd->add_option("--trace", qtm.trace_path, "Write 'step state tape amplitude' lines to a file");
    qtm_cmd->add_option("--cap", qtm.cap, "Vertex cap");

    ModelsOptions models;
    auto* models_cmd = app.add_subcommand("models", "Emit complexity curves");
    models_cmd->add_option("--set", models.set, "fig2 | fig3 | all");
    models_cmd->add_option("--model", models.names, "Explicit model names (overrides --set)");
    models_cmd->add_option("--n-min", models.n_min, "First n");
    models_cmd->add_option("--n-max", models.n_max, "Last n");
    models_cmd->add_option("--format", models.format, "csv | json");
    models_cmd->add_flag("--crossovers", models.crossovers, "Append the crossover table");
    models_cmd->add_option("-o,--out", models.out_path, "Output file");

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Evaluate the degree-product conditions");
    check_cmd->add_option("graph", check.graph_path, "Graph file")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitError;
    }

    const auto started = std::chrono::steady_clock::now();
    std::ostringstream captured;
    int code = kExitError;
    std::string command;
    try {
        if (*gen_cmd) {
            command = "gen";
            code = cmd_gen(gen, global, captured);
        } else if (*solve_cmd) {
            command = "solve";
            code = cmd_solve(solve, captured);
        } else if (*walk_cmd) {
            command = "walk";
            code = cmd_walk(walk, global, captured);
        } else if (*qtm_cmd) {
            command = "qtm";
            code = cmd_qtm(qtm, global, captured);
        } else if (*models_cmd) {
            command = "models";
            code = cmd_models(models, captured);
        } else if (*check_cmd) {
            command = "check";
            code = cmd_check(check, captured);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    out << captured.str();

    if (!global.record_path.empty()) {
        const auto wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        Json params = Json::object();
        for (const auto* opt : app.get_subcommand(command)->get_options()) {
            if (opt->get_name() == "--help" || opt->count() == 0) continue;
            params[opt->get_name()] = opt->as<std::string>();
        }
        Json record;
        record["command"] = command;
        record["params"] = std::move(params);
        record["seed"] = global.seed;
        const std::string text = captured.str();
        record["outputs"] = Json::accept(text) ? Json::parse(text) : Json(text);
        record["exit_code"] = code;
        record["wall_ms"] = wall_ms;
        try {
            write_text(global.record_path, record.dump(2) + '\n');
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return kExitError;
        }
    }
    return code;
}

}  // namespace hcplab::cli
