#pragma once

// Command line front end. `cli_main` is the whole tool; tools/burnkit.cpp only
// forwards argv to it. Every subcommand reads and writes the text formats of
// io.hpp and prints a key<TAB>value report on stdout.
//
// Exit status: 0 success, 1 domain error (the error kind is echoed on stderr),
// 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "burnkit/burning.hpp"
#include "burnkit/error.hpp"
#include "burnkit/gadgets.hpp"
#include "burnkit/generators.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/io.hpp"
#include "burnkit/lift.hpp"
#include "burnkit/reduction.hpp"
#include "burnkit/solvers.hpp"

namespace burnkit {

namespace detail {

inline std::string join(const std::vector<std::string>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

inline int int_param(const std::vector<std::string>& params, std::size_t i, const std::string& kind) {
    if (i >= params.size()) throw Error("InvalidParams", kind + " needs " + std::to_string(i + 1) + " parameter(s)");
    try {
        std::size_t used = 0;
        long v = std::stol(params[i], &used);
        if (used != params[i].size() || v < -1'000'000'000L || v > 1'000'000'000L) throw std::invalid_argument("");
        return static_cast<int>(v);
    } catch (const std::logic_error&) {
        throw Error("InvalidParams", "'" + params[i] + "' is not an integer");
    }
}

inline GadgetHandle generate(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed) {
    auto p = [&](std::size_t i) { return int_param(params, i, kind); };
    auto count = [&](std::size_t expected) {
        if (params.size() != expected)
            throw Error("InvalidParams", kind + " takes " + std::to_string(expected) + " parameter(s)");
    };
    auto size_arg = [&](std::size_t i) {
        int v = p(i);
        if (v < 0) throw Error("InvalidParams", "size must be non-negative");
        return static_cast<std::size_t>(v);
    };
    if (kind == "T") return count(2), make_t_gadget(p(0), p(1));
    if (kind == "BT") return count(1), make_bt_gadget(p(0));
    if (kind == "BTP") return count(3), make_btp_gadget(p(0), p(1), p(2));
    if (kind == "P") return count(1), make_p_gadget(p(0));
    if (kind == "Y") return count(2), make_y_gadget(p(0), p(1));
    if (kind == "Tail") return count(0), make_tail_gadget();
    if (kind == "C") return count(1), make_c_gadget(p(0));
    if (kind == "path") return count(1), GadgetHandle{path_graph(size_arg(0)), {}};
    if (kind == "cycle") return count(1), GadgetHandle{cycle_graph(size_arg(0)), {}};
    if (kind == "K") return count(1), GadgetHandle{complete_graph(size_arg(0)), {}};
    if (kind == "K33") return count(0), GadgetHandle{k33_graph(), {}};
    if (kind == "prism") return count(0), GadgetHandle{prism_graph(), {}};
    if (kind == "random-cubic") {
        count(1);
        std::mt19937_64 rng(seed);
        return GadgetHandle{random_cubic_graph(size_arg(0), rng), {}};
    }
    throw Error("InvalidParams", "unknown gadget kind '" + kind + "'");
}

inline Graph load_graph(const std::string& path) { return read_graph(read_file(path)); }
inline BurningSequence load_sequence(const std::string& path) { return read_sequence(read_file(path)); }

/// "h.g" -> "h.meta"; a path without extension just gains ".meta".
inline std::string meta_path_for(const std::string& graph_path) {
    auto slash = graph_path.find_last_of('/');
    auto dot = graph_path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return graph_path + ".meta";
    return graph_path.substr(0, dot) + ".meta";
}

inline void add_schedule_rows(Report& r, const Graph& g, const BurningSchedule& s) {
    r.add("length", s.length);
    r.add("vertices", g.order());
    r.add("burned", g.order() - s.unburned_count());
    r.add("unburned", s.unburned_count());
    r.add("last_burn_step", s.last_burn_step());
    if (s.complete()) {
        r.add("bl", last_step_set(s).size());
        r.add("ub", uniquely_burned_set(s).size());
        r.add("bl_cap_ub", last_step_unique_set(s).size());
        r.add("result", "complete at step " + std::to_string(s.last_burn_step()));
    } else {
        r.add("result", "incomplete: " + std::to_string(s.unburned_count()) + " unburned after step " +
                            std::to_string(s.length));
    }
}

}  // namespace detail

/// Runs one command line. `args` excludes the program name.
inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"burnkit: graph burning, vertex cover reductions and regular lifts", "burnkit"};
    app.require_subcommand(1, 1);
    bool timing = false;
    app.add_flag("--timing", timing, "append elapsed wall time to the report");

    std::string output, landmarks_path, kind;
    std::vector<std::string> params;
    std::uint64_t seed = 1, budget = SolverOptions{}.node_budget;
    int d = 0, d_prime = 0;
    std::string graph_path, seq_path, meta_path, cover_path, seq_out;

    auto* gen = app.add_subcommand("gen-gadget", "write a gadget or test graph as an edge list");
    gen->add_option("kind", kind, "T, BT, BTP, P, Y, Tail, C, path, cycle, K, K33, prism, random-cubic")->required();
    gen->add_option("params", params, "integer parameters of the gadget");
    gen->add_option("-o,--output", output, "edge list output (stdout if omitted)");
    gen->add_option("-l,--landmarks", landmarks_path, "landmark sidecar output");
    gen->add_option("--seed", seed, "seed for random-cubic");

    auto* reduce = app.add_subcommand("reduce", "build H from a connected cubic graph");
    reduce->add_option("graph", graph_path, "edge list of G")->required();
    reduce->add_option("-o,--output", output, "edge list of H")->required();
    reduce->add_option("-l,--landmarks", landmarks_path, "landmark and domain sidecar");
    reduce->add_option("--meta", meta_path, "instance metadata (default: output with .meta extension)");

    auto* lift = app.add_subcommand("lift", "build the d-regular lift H_d of a cubic graph");
    lift->add_option("graph", graph_path, "edge list of the base graph")->required();
    lift->add_option("--d", d, "target degree (>= 4)")->required();
    lift->add_option("-o,--output", output, "edge list of H_d")->required();
    lift->add_option("-s,--sequence", seq_path, "burning sequence of the base graph to lift");
    lift->add_option("--sequence-out", seq_out, "lifted sequence output");

    auto* project = app.add_subcommand("project", "project a burning sequence of H_d onto H_d'");
    project->add_option("graph", graph_path, "edge list of the base graph")->required();
    project->add_option("sequence", seq_path, "burning sequence of H_d")->required();
    project->add_option("--d", d, "degree of the lift the sequence lives on")->required();
    project->add_option("--dprime", d_prime, "target degree, 3 <= d' < d")->required();
    project->add_option("-o,--output", output, "projected sequence output");

    auto* burn = app.add_subcommand("burn", "simulate a burning sequence");
    burn->add_option("graph", graph_path, "edge list")->required();
    burn->add_option("sequence", seq_path, "burning sequence")->required();

    auto* solve_burn = app.add_subcommand("solve-burn", "exact burning number");
    solve_burn->add_option("graph", graph_path, "edge list")->required();
    solve_burn->add_option("--budget", budget, "search node budget");
    solve_burn->add_option("-o,--output", output, "witness sequence output");

    auto* solve_vc = app.add_subcommand("solve-vc", "exact minimum vertex cover");
    solve_vc->add_option("graph", graph_path, "edge list")->required();
    solve_vc->add_option("--budget", budget, "search node budget");
    solve_vc->add_option("-o,--output", output, "cover output, one label per line");

    auto* witness = app.add_subcommand("witness", "burning sequence of H from a vertex cover of G'");
    witness->add_option("meta", meta_path, "instance metadata written by reduce")->required();
    witness->add_option("--cover", cover_path, "cover of G' (default: a minimum cover)");
    witness->add_option("-o,--output", output, "sequence output");

    auto* audit = app.add_subcommand("audit", "block, owner and edge audit of a sequence of H");
    audit->add_option("meta", meta_path, "instance metadata written by reduce")->required();
    audit->add_option("sequence", seq_path, "burning sequence of H")->required();

    auto* stats = app.add_subcommand("stats", "size, degrees and connectivity");
    stats->add_option("graph", graph_path, "edge list")->required();

    auto* dot = app.add_subcommand("dot", "Graphviz export");
    dot->add_option("graph", graph_path, "edge list")->required();
    dot->add_option("-l,--landmarks", landmarks_path, "landmark sidecar used for styling");
    dot->add_option("-o,--output", output, "DOT output (stdout if omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    Report r;
    try {
        if (gen->parsed()) {
            auto g = detail::generate(kind, params, seed);
            r.add("command", "gen-gadget").add("kind", kind).add("vertices", g.graph.order()).add("edges", g.graph.size());
            if (!landmarks_path.empty()) write_file(landmarks_path, write_landmarks(g.landmarks));
            if (output.empty()) {
                out << write_graph(g.graph);
                return 0;
            }
            write_file(output, write_graph(g.graph));
        } else if (reduce->parsed()) {
            auto inst = build_H(detail::load_graph(graph_path));
            write_file(output, write_graph(inst.h));
            if (meta_path.empty()) meta_path = detail::meta_path_for(output);
            auto meta = instance_meta(inst);
            write_file(meta_path, meta.str());
            if (!landmarks_path.empty()) write_file(landmarks_path, write_landmarks(inst.landmarks));
            r.add("command", "reduce");
            for (const auto& [k, v] : meta.rows())
                if (k != "g_edge") r.add(k, v);
            r.add("h_cubic", is_regular(inst.h, 3));
            r.add("h_connected", is_connected(inst.h));
            r.add("meta", meta_path);
        } else if (lift->parsed()) {
            auto hd = build_Hd(detail::load_graph(graph_path), d);
            write_file(output, write_graph(hd.graph));
            r.add("command", "lift").add("d", d).add("vertices", hd.graph.order()).add("edges", hd.graph.size());
            r.add("regular", is_regular(hd.graph, static_cast<std::size_t>(d)));
            if (!seq_path.empty()) {
                auto lifted = lift_sequence(detail::load_sequence(seq_path), hd);
                if (!seq_out.empty()) write_file(seq_out, write_sequence(lifted));
                r.add("lifted_length", lifted.size());
                r.add("lifted_sequence", detail::join(lifted));
            }
        } else if (project->parsed()) {
            auto hd = build_Hd(detail::load_graph(graph_path), d);
            auto res = project_sequence(hd, detail::load_sequence(seq_path), d_prime);
            if (!output.empty()) write_file(output, write_sequence(res.sequence));
            r.add("command", "project").add("d", d).add("dprime", d_prime);
            r.add("length", res.sequence.size());
            r.add("repair_pass", res.used_fallback);
            r.add("sequence", detail::join(res.sequence));
        } else if (burn->parsed()) {
            auto g = detail::load_graph(graph_path);
            auto seq = detail::load_sequence(seq_path);
            auto s = simulate(g, seq);
            r.add("command", "burn");
            detail::add_schedule_rows(r, g, s);
        } else if (solve_burn->parsed()) {
            auto g = detail::load_graph(graph_path);
            SolveResult res;
            try {
                res = burning_number_exact(g, {budget});
            } catch (const BudgetExceeded& e) {
                err << "error\t" << e.kind() << "\t" << e.what() << "\n";
                out << "lower_bound\t" << e.lower_bound() << "\nupper_bound\t" << e.upper_bound() << "\n";
                return 1;
            }
            if (!output.empty()) write_file(output, write_sequence(res.witness));
            r.add("command", "solve-burn").add("vertices", g.order()).add("burning_number", res.value);
            r.add("nodes", static_cast<long long>(res.nodes));
            r.add("witness", detail::join(res.witness));
        } else if (solve_vc->parsed()) {
            auto g = detail::load_graph(graph_path);
            SolveResult res;
            try {
                res = vertex_cover_exact(g, {budget});
            } catch (const BudgetExceeded& e) {
                err << "error\t" << e.kind() << "\t" << e.what() << "\n";
                return 1;
            }
            if (!output.empty()) write_file(output, write_sequence(res.witness));
            r.add("command", "solve-vc").add("vertices", g.order()).add("cover_size", res.value);
            r.add("cover", detail::join(res.witness));
        } else if (witness->parsed()) {
            auto inst = instance_from_meta(read_report(read_file(meta_path)));
            std::vector<std::string> cover =
                cover_path.empty() ? vertex_cover_exact(inst.g_prime()).witness : detail::load_sequence(cover_path);
            auto seq = vc_to_witness(inst, cover);
            if (!output.empty()) write_file(output, write_sequence(seq));
            r.add("command", "witness").add("cover_size", cover.size()).add("length", seq.size());
            r.add("cover", detail::join(cover));
        } else if (audit->parsed()) {
            auto inst = instance_from_meta(read_report(read_file(meta_path)));
            auto a = audit_sequence(inst, detail::load_sequence(seq_path));
            r.add("command", "audit");
            const Report rows = a.to_report();
            for (const auto& [k, v] : rows.rows()) r.add(k, v);
        } else if (stats->parsed()) {
            auto g = detail::load_graph(graph_path);
            r.add("command", "stats").add("vertices", g.order()).add("edges", g.size());
            r.add("connected", is_connected(g));
            for (auto [deg, n] : degree_histogram(g)) r.add("degree_" + std::to_string(deg), n);
            if (g.order() > 0 && g.order() <= 2000 && is_connected(g)) {
                int diameter = 0;
                for (const auto& row : all_pairs_distances(g))
                    for (int x : row) diameter = std::max(diameter, x);
                r.add("diameter", diameter);
            }
        } else if (dot->parsed()) {
            auto g = detail::load_graph(graph_path);
            Landmarks lm;
            if (!landmarks_path.empty()) lm = read_landmarks(read_file(landmarks_path));
            auto text = export_dot(g, landmarks_path.empty() ? nullptr : &lm);
            if (output.empty()) {
                out << text;
                return 0;
            }
            write_file(output, text);
            r.add("command", "dot").add("vertices", g.order()).add("edges", g.size());
        }
    } catch (const Error& e) {
        err << "error\t" << e.kind() << "\t" << e.what() << "\n";
        return 1;
    }

    out << r.str();
    if (timing) {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << "# timing\nelapsed_seconds\t" << secs << "\n";
    }
    return 0;
}

}  // namespace burnkit
