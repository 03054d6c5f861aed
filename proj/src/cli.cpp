#include "mldist/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mldist/core.hpp"
#include "mldist/distances.hpp"
#include "mldist/fas.hpp"
#include "mldist/generators.hpp"
#include "mldist/io.hpp"
#include "mldist/matching.hpp"
#include "mldist/oracle.hpp"
#include "mldist/popular.hpp"
#include "mldist/prefdigraph.hpp"

namespace mldist {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParamsError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json matching_json(const PreferenceSystem& i, const Matching& m) {
    json out = json::array();
    for (const Edge& e : m) out.push_back({i.name(e.first), i.name(e.second)});
    return out;
}

json edges_json(const PreferenceSystem& i, const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({i.name(e.first), i.name(e.second)});
    return out;
}

struct DocumentPrinter {
    std::ostream& out;
    std::string command;
    Clock::time_point start = Clock::now();

    int emit(json value, json witness, bool verified, int exit_code) {
        auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        json doc;
        doc["command"] = command;
        doc["value"] = std::move(value);
        doc["witness"] = std::move(witness);
        doc["verified"] = verified;
        doc["elapsed_ms"] = elapsed.count();
        out << doc.dump(2) << "\n";
        return exit_code;
    }
};

std::vector<Edge> parse_edge_list(const PreferenceSystem& i,
                                  const std::vector<std::string>& tokens) {
    std::vector<Edge> out;
    for (const std::string& t : tokens) out.push_back(parse_edge_token(i, t));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Vertex> parse_vertex_list(const PreferenceSystem& i,
                                      const std::vector<std::string>& tokens) {
    std::vector<Vertex> out;
    for (const std::string& t : tokens) out.push_back(i.require(t));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int run_check(const std::string& file, std::ostream& out) {
    DocumentPrinter doc{out, "check"};
    PreferenceSystem inst = parse_instance(read_file(file));
    auto ml = admits_master_list(inst);
    if (!ml) {
        bool verified = find_strict_cycle(build_digraph(inst)).has_value();
        return doc.emit("NONE", nullptr, verified, 1);
    }
    std::string formatted = format_master_list(*ml, inst.names());
    bool verified = is_consistent(inst, *ml);
    return doc.emit(formatted, json{{"master_list", formatted}}, verified, 0);
}

int run_dist(const std::string& file, const std::string& measure, const std::string& mode,
             int budget, int threads, std::ostream& out) {
    DocumentPrinter doc{out, "dist " + measure + " " + mode};
    PreferenceSystem inst = parse_instance(read_file(file));

    if (measure == "swap") {
        if (mode != "exact")
            throw InvalidParamsError("swap distance only supports --mode exact");
        int cap = budget >= 0 ? budget
                              : static_cast<int>(build_digraph(inst).arcs.size());
        auto r = delta_swap(inst, cap);
        if (!r) return doc.emit("NONE", nullptr, true, 1);
        json witness;
        if (r->strict_swaps) {
            json swaps = json::array();
            for (const Swap& s : *r->strict_swaps)
                swaps.push_back({inst.name(s.a), inst.name(s.b), inst.name(s.v)});
            witness["swaps"] = swaps;
        }
        witness["witness_instance"] = serialize_instance(r->witness_instance);
        DistanceValue d = instance_swap_distance(inst, r->witness_instance);
        witness["witness_distance"] = d.is_infinite() ? json("INF") : json(d.value());
        bool verified = admits_master_list(r->witness_instance).has_value() &&
                        !d.is_infinite() && d.value() == r->value;
        if (r->strict_swaps) {
            PreferenceSystem replayed = apply_swaps(inst, *r->strict_swaps);
            verified = verified && serialize_instance(replayed) ==
                                       serialize_instance(r->witness_instance);
        }
        return doc.emit(r->value, witness, verified, 0);
    }

    if (measure == "edge") {
        int cap = budget >= 0 ? budget : inst.num_edges();
        std::optional<EdgeWitness> r;
        if (mode == "exact")
            r = delta_edge_exact(inst, cap, threads);
        else if (mode == "approx")
            r = delta_edge_2approx(inst, cap);
        else
            throw InvalidParamsError("unknown mode: " + mode);
        if (!r) return doc.emit("NONE", nullptr, true, 1);
        bool verified = admits_master_list(delete_edges(inst, r->edges)).has_value();
        return doc.emit(static_cast<long long>(r->edges.size()),
                        json{{"edges", edges_json(inst, r->edges)}}, verified, 0);
    }

    if (measure == "vert") {
        if (mode != "exact")
            throw InvalidParamsError("vertex distance only supports --mode exact");
        int cap = budget >= 0 ? budget : inst.num_vertices();
        auto r = delta_vert_exact(inst, cap, threads);
        if (!r) return doc.emit("NONE", nullptr, true, 1);
        bool verified = admits_master_list(delete_vertices(inst, r->vertices)).has_value();
        json names = json::array();
        for (Vertex v : r->vertices) names.push_back(inst.name(v));
        return doc.emit(static_cast<long long>(r->vertices.size()),
                        json{{"vertices", names}}, verified, 0);
    }

    throw InvalidParamsError("unknown measure: " + measure);
}

int run_enum_stable(const std::string& file, const std::vector<std::string>& edge_mod,
                    const std::vector<std::string>& vertex_mod, bool edge_mod_given,
                    bool vertex_mod_given, const std::vector<std::string>& blocking_tokens,
                    std::ostream& out) {
    DocumentPrinter doc{out, "enum-stable"};
    PreferenceSystem inst = parse_instance(read_file(file));
    std::vector<Edge> blocking = parse_edge_list(inst, blocking_tokens);

    if (edge_mod_given && vertex_mod_given)
        throw InvalidParamsError("give either an edge or a vertex modulator, not both");

    std::vector<Matching> result;
    if (edge_mod_given) {
        result = enum_bp_edge_modulator(inst, blocking, parse_edge_list(inst, edge_mod));
    } else if (vertex_mod_given) {
        result =
            enum_bp_vertex_modulator(inst, blocking, parse_vertex_list(inst, vertex_mod));
    } else {
        AutoModulator mod = choose_modulator(inst);
        result = mod.use_vertices ? enum_bp_vertex_modulator(inst, blocking, mod.vertices)
                                  : enum_bp_edge_modulator(inst, blocking, mod.edges);
    }

    bool verified = true;
    std::set<Matching> distinct;
    for (const Matching& m : result) {
        verified = verified && blocking_edges(inst, m) == blocking;
        verified = verified && distinct.insert(m).second;
    }
    json witness;
    witness["matchings"] = json::array();
    for (const Matching& m : result) witness["matchings"].push_back(matching_json(inst, m));
    return doc.emit(static_cast<long long>(result.size()), witness, verified, 0);
}

int run_mupmic(const std::string& file, const std::string& weights_file, long long target,
               long long budget, const std::vector<std::string>& edge_mod,
               const std::vector<std::string>& vertex_mod, bool edge_mod_given,
               bool vertex_mod_given, std::ostream& out) {
    DocumentPrinter doc{out, "mupmic"};
    MupmicInstance inst;
    inst.system = parse_instance(read_file(file));
    parse_weights(read_file(weights_file), inst.system, inst.utility, inst.cost);
    inst.target = target;
    inst.budget = budget;

    if (edge_mod_given && vertex_mod_given)
        throw InvalidParamsError("give either an edge or a vertex modulator, not both");

    std::optional<MupmicResult> r;
    if (edge_mod_given)
        r = solve_mupmic(inst, Modulator{parse_edge_list(inst.system, edge_mod)});
    else if (vertex_mod_given)
        r = solve_mupmic(inst, Modulator{parse_vertex_list(inst.system, vertex_mod)});
    else
        r = solve_mupmic_auto(inst);

    if (!r) return doc.emit("NONE", nullptr, true, 1);

    auto blocking = blocking_edges(inst.system, r->matching);
    long long block_cost = 0;
    for (const Edge& e : blocking) block_cost += inst.cost.at(e);
    long long utility = 0;
    for (const Edge& e : r->matching) utility += inst.utility.at(e);
    bool verified = utility == r->utility && block_cost == r->cost &&
                    block_cost <= inst.budget && utility >= inst.target &&
                    is_popular(inst.system, r->matching);

    json witness;
    witness["matching"] = matching_json(inst.system, r->matching);
    witness["utility"] = r->utility;
    witness["cost"] = r->cost;
    witness["blocking"] = edges_json(inst.system, blocking);
    return doc.emit(r->utility, witness, verified, 0);
}

int run_gen(const std::string& family, const std::vector<std::string>& params,
            std::uint64_t seed, std::ostream& out) {
    PreferenceSystem inst;
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw InvalidParamsError("family " + family + " expects " +
                                     std::to_string(count) + " parameter(s)");
    };
    if (family == "four-cycles") {
        need(1);
        inst = gen_four_cycles(std::stoi(params[0]));
    } else if (family == "jkn") {
        need(2);
        inst = gen_jkn(std::stoi(params[0]), std::stoi(params[1]));
    } else if (family == "random") {
        need(3);
        inst = gen_random(std::stoi(params[0]), std::stod(params[1]), std::stod(params[2]),
                          seed);
    } else if (family == "fas") {
        need(1);
        inst = reduce_fas_to_ml(parse_digraph(read_file(params[0])));
    } else if (family == "hitting-set") {
        need(1);
        inst = reduce_hitting_set_to_mlvd(parse_hitting_set(read_file(params[0])));
    } else {
        throw InvalidParamsError("unknown family: " + family);
    }
    out << serialize_instance(inst);
    return 0;
}

int run_oracle(const std::string& solver, const std::string& file, int budget,
               std::ostream& out) {
    DocumentPrinter doc{out, "oracle " + solver};
    PreferenceSystem inst = parse_instance(read_file(file));

    if (solver == "stable") {
        auto result = brute_force_stable(inst);
        json witness;
        witness["matchings"] = json::array();
        bool verified = true;
        for (const Matching& m : result) {
            witness["matchings"].push_back(matching_json(inst, m));
            verified = verified && blocking_edges(inst, m).empty();
        }
        return doc.emit(static_cast<long long>(result.size()), witness, verified, 0);
    }
    if (solver == "check") {
        auto ml = oracle_master_list(inst);
        if (!ml) return doc.emit("NONE", nullptr, true, 1);
        std::string formatted = format_master_list(*ml, inst.names());
        return doc.emit(formatted, json{{"master_list", formatted}},
                        is_consistent(inst, *ml), 0);
    }
    if (solver == "swap") {
        long long cap = budget >= 0 ? budget
                                    : static_cast<long long>(build_digraph(inst).arcs.size());
        auto v = oracle_delta_swap(inst, cap);
        if (!v) return doc.emit("NONE", nullptr, true, 1);
        return doc.emit(*v, nullptr, true, 0);
    }
    if (solver == "edge") {
        int cap = budget >= 0 ? budget : inst.num_edges();
        auto r = oracle_delta_edge(inst, cap);
        if (!r) return doc.emit("NONE", nullptr, true, 1);
        return doc.emit(static_cast<long long>(r->size()),
                        json{{"edges", edges_json(inst, *r)}}, true, 0);
    }
    if (solver == "vert") {
        int cap = budget >= 0 ? budget : inst.num_vertices();
        auto r = oracle_delta_vert(inst, cap);
        if (!r) return doc.emit("NONE", nullptr, true, 1);
        json names = json::array();
        for (Vertex v : *r) names.push_back(inst.name(v));
        return doc.emit(static_cast<long long>(r->size()), json{{"vertices", names}}, true,
                        0);
    }
    throw InvalidParamsError("unknown oracle solver: " + solver);
}

int run_experiment(int n, int samples, std::uint64_t seed, std::ostream& out) {
    DocumentPrinter doc{out, "experiment swap-vs-count"};
    json table = json::array();
    std::map<long long, std::size_t> max_count_by_delta;
    for (int s = 0; s < samples; ++s) {
        PreferenceSystem inst = gen_random(n, 0.5, 0.0, seed + static_cast<std::uint64_t>(s));
        auto d = delta_swap(inst, static_cast<int>(build_digraph(inst).arcs.size()));
        std::size_t count = enum_stable(inst).size();
        long long delta = d ? d->value : -1;
        auto it = max_count_by_delta.find(delta);
        if (it == max_count_by_delta.end() || it->second < count)
            max_count_by_delta[delta] = count;
        table.push_back({{"seed", seed + static_cast<std::uint64_t>(s)},
                         {"delta_swap", delta},
                         {"stable_count", count}});
    }
    json witness;
    witness["samples"] = table;
    json by_delta = json::object();
    for (const auto& [delta, count] : max_count_by_delta)
        by_delta[std::to_string(delta)] = count;
    witness["max_stable_count_by_delta_swap"] = by_delta;
    return doc.emit(samples, witness, true, 0);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"master-list distances and matching tools for preference systems"};
    app.require_subcommand(1);

    // check
    std::string check_file;
    auto* check = app.add_subcommand("check", "detect a master list");
    check->add_option("file", check_file, "instance file")->required();

    // dist
    std::string dist_file, dist_measure, dist_mode = "exact";
    int dist_budget = -1, dist_threads = 1;
    auto* dist = app.add_subcommand("dist", "distance from admitting a master list");
    dist->add_option("--measure", dist_measure, "swap, edge or vert")->required();
    dist->add_option("--mode", dist_mode, "exact or approx");
    dist->add_option("--budget", dist_budget, "search budget (default: unbounded)");
    dist->add_option("--threads", dist_threads, "worker threads for exhaustive search");
    dist->add_option("file", dist_file, "instance file")->required();

    // enum-stable
    std::string enum_file;
    std::vector<std::string> enum_edge_mod, enum_vertex_mod, enum_blocking;
    bool enum_auto = false;
    auto* enum_cmd = app.add_subcommand("enum-stable", "enumerate matchings by blocking set");
    enum_cmd->add_option("--edge-modulator", enum_edge_mod, "edges a--b whose deletion");
    enum_cmd->add_option("--vertex-modulator", enum_vertex_mod, "vertices whose deletion");
    enum_cmd->add_flag("--auto", enum_auto, "pick the modulator automatically (default)");
    enum_cmd->add_option("--blocking", enum_blocking, "required blocking edges a--b");
    enum_cmd->add_option("file", enum_file, "instance file")->required();

    // mupmic
    std::string mup_file, mup_weights;
    long long mup_target = 0, mup_budget = 0;
    std::vector<std::string> mup_edge_mod, mup_vertex_mod;
    auto* mup = app.add_subcommand("mupmic", "max-utility popular matching with costs");
    mup->add_option("--weights", mup_weights, "weights file")->required();
    mup->add_option("--target", mup_target, "minimum total utility")->required();
    mup->add_option("--budget", mup_budget, "blocking cost budget")->required();
    mup->add_option("--edge-modulator", mup_edge_mod, "edges a--b");
    mup->add_option("--vertex-modulator", mup_vertex_mod, "vertices");
    mup->add_option("file", mup_file, "instance file")->required();

    // gen
    std::string gen_family;
    std::vector<std::string> gen_params;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "emit a generated instance");
    gen->add_option("family", gen_family, "four-cycles | jkn | random | fas | hitting-set")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("--seed", gen_seed, "random seed");

    // oracle
    std::string oracle_solver, oracle_file;
    int oracle_budget = -1;
    auto* oracle = app.add_subcommand("oracle", "brute-force counterparts");
    oracle->add_option("solver", oracle_solver, "stable | check | swap | edge | vert")
        ->required();
    oracle->add_option("--budget", oracle_budget, "search budget");
    oracle->add_option("file", oracle_file, "instance file")->required();

    // experiment
    int exp_n = 6, exp_samples = 30;
    std::uint64_t exp_seed = 1;
    auto* exp = app.add_subcommand("experiment", "small studies");
    std::string exp_name;
    exp->add_option("name", exp_name, "swap-vs-count")->required();
    exp->add_option("--n", exp_n, "vertices per sample");
    exp->add_option("--samples", exp_samples, "number of samples");
    exp->add_option("--seed", exp_seed, "base seed");

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    std::string program = "mldist";
    argv.push_back(program.data());
    for (auto& a : storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help goes to the regular output stream
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) return run_check(check_file, out);
        if (*dist)
            return run_dist(dist_file, dist_measure, dist_mode, dist_budget, dist_threads,
                            out);
        if (*enum_cmd)
            return run_enum_stable(enum_file, enum_edge_mod, enum_vertex_mod,
                                   !enum_edge_mod.empty(), !enum_vertex_mod.empty(),
                                   enum_blocking, out);
        if (*mup)
            return run_mupmic(mup_file, mup_weights, mup_target, mup_budget, mup_edge_mod,
                              mup_vertex_mod, !mup_edge_mod.empty(), !mup_vertex_mod.empty(),
                              out);
        if (*gen) return run_gen(gen_family, gen_params, gen_seed, out);
        if (*oracle) return run_oracle(oracle_solver, oracle_file, oracle_budget, out);
        if (*exp) {
            if (exp_name != "swap-vs-count")
                throw InvalidParamsError("unknown experiment: " + exp_name);
            return run_experiment(exp_n, exp_samples, exp_seed, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace mldist
