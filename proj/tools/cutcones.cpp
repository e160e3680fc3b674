// Command-line front end: graph construction and export, adjacency queries
// with certificates and LP cross-checks, instance solving, local-search
// walks, structural verification, and raw LP dumps.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage or
// parse error. Data goes to stdout (or --out), diagnostics to stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutcones/adjacency.hpp"
#include "cutcones/core.hpp"
#include "cutcones/export.hpp"
#include "cutcones/graphs.hpp"
#include "cutcones/instance_io.hpp"
#include "cutcones/lp.hpp"
#include "cutcones/oracle.hpp"
#include "cutcones/verify.hpp"
#include "cutcones/walker.hpp"

namespace {

using namespace cutcones;

Sense parse_sense(const std::string& s) {
    if (s == "min") return Sense::Min;
    if (s == "max") return Sense::Max;
    throw std::invalid_argument("sense must be 'min' or 'max'");
}

/// "1,2,5" -> canonical cut on n vertices.
Cut parse_cut_list(const std::string& text, int n) {
    VertexMask mask = 0;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad vertex '" + item + "' in cut list");
        }
        if (pos != item.size()) throw std::invalid_argument("bad vertex '" + item + "' in cut list");
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " out of range for n=" + std::to_string(n));
        VertexMask bit = VertexMask{1} << v;
        if (mask & bit) throw std::invalid_argument("vertex " + std::to_string(v) + " listed twice");
        mask |= bit;
    }
    if (mask == 0) throw std::invalid_argument("cut list is empty");
    return canonicalize(mask, n);
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << data;
}

std::string cut_braces(const Cut& c) { return "{" + format_vertex_list(c.mask()) + "}"; }

int run_graph(int n, Sense sense, bool stats, const std::string& format,
              const std::string& out, int threads, int cap_n, int cap_clique) {
    ConePartitionGraph g = build_graph(n, sense, threads, cap_n);
    if (format.empty() && !stats) {
        std::ostringstream line;
        line << "graph n=" << n << " sense=" << sense_name(sense) << " vertices="
             << g.vertex_count() << " edges=" << g.edge_total() << "\n";
        write_output(out, line.str());
        return 0;
    }
    std::string data;
    if (format == "dot")
        data = dot_export(g);
    else if (format == "csv")
        data = csv_export(g);
    else  // "json" or --stats
        data = stats_json(g, cap_clique, threads).dump(2) + "\n";
    write_output(out, data);
    if (stats || format == "json") {
        nlohmann::json doc = stats_json(g, cap_clique, threads);
        for (const auto& check : doc["checks"])
            if (!check["pass"].get<bool>()) {
                std::cerr << "check failed: " << check["claim"].get<std::string>() << "\n";
                return 1;
            }
    }
    return 0;
}

int run_adjacent(int n, const std::string& xs, const std::string& ys, Sense sense,
                 bool certify, bool oracle) {
    Cut x = parse_cut_list(xs, n);
    Cut y = parse_cut_list(ys, n);
    if (x == y) throw std::invalid_argument("cuts coincide after canonicalization");
    AdjacencyVerdict verdict = adjacent(x, y, sense);
    std::ostringstream line;
    line << (verdict.adjacent ? "adjacent" : "not adjacent") << " (" << reason_name(verdict.reason)
         << ")";
    int status = 0;
    if (oracle) {
        bool lp = oracle_adjacent(x, y, sense);
        if (lp == verdict.adjacent) {
            line << "; oracle agrees";
        } else {
            line << "; ORACLE DISAGREES";
            std::cerr << "oracle disagreement on " << cut_braces(x) << " vs " << cut_braces(y)
                      << " sense " << sense_name(sense) << "; LP dump follows\n"
                      << dump_lp(adjacency_lp(x, y, sense));
            status = 1;
        }
    }
    std::cout << line.str() << "\n";
    if (certify) {
        if (!verdict.adjacent) {
            std::cerr << "no certificate: cones are not adjacent\n";
            return 1;
        }
        Certificate cert =
            sense == Sense::Min ? min_certificate(x, y) : max_certificate(x, y);
        Cut violator = x;
        if (!verify_certificate(cert, &violator)) {
            std::cerr << "constructed certificate failed verification; violator "
                      << cut_braces(violator) << "\n";
            return 1;
        }
        std::cout << serialize_certificate(cert);
    }
    return status;
}

void print_optima(const Instance& inst, Sense sense) {
    std::vector<Cut> best = cone_membership(inst, sense);
    std::cout << "value " << format_rational(cut_value(inst, best.front())) << "\n";
    std::cout << "count " << best.size() << "\n";
    for (const Cut& c : best) std::cout << "cut " << cut_braces(c) << "\n";
}

int run_solve(const Instance& inst, Sense sense, const std::string& method,
              const std::string& start_list) {
    if (method == "brute") {
        print_optima(inst, sense);
        return 0;
    }
    Cut start = start_list.empty() ? canonicalize(VertexMask{2}, inst.n())
                                   : parse_cut_list(start_list, inst.n());
    WalkTrace trace = local_search(inst, start, sense);
    std::cout << "start " << cut_braces(trace.start) << " value "
              << format_rational(trace.start_value) << "\n";
    std::cout << "terminal " << cut_braces(trace.terminal()) << " value "
              << format_rational(trace.terminal_value()) << " after " << trace.steps.size()
              << " steps\n";
    return 0;
}

int run_walk(const Instance& inst, Sense sense, const std::string& start_list,
             const std::string& out) {
    Cut start = start_list.empty() ? canonicalize(VertexMask{2}, inst.n())
                                   : parse_cut_list(start_list, inst.n());
    write_output(out, trace_jsonl(local_search(inst, start, sense)));
    return 0;
}

int run_verify(int n, const VerifyOptions& opts) {
    VerifyReport report = verify_all(n, opts);
    std::cout << format_report(report);
    return report.all_pass() ? 0 : 1;
}

int run_export_lp(int n, const std::string& xs, const std::string& ys, Sense sense,
                  const std::string& out) {
    Cut x = parse_cut_list(xs, n);
    Cut y = parse_cut_list(ys, n);
    write_output(out, dump_lp(adjacency_lp(x, y, sense)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cone partitions of the positive orthant for min/max cut on complete graphs"};
    app.require_subcommand(1);

    int n = 4;
    std::string sense_text = "min";
    std::string x_list, y_list, instance_path, out_path, export_format, method = "brute",
                start_list;
    bool stats = false, certify = false, oracle = false;
    int threads = 0, cap_n = 12, cap_lp = 6, cap_clique = 8;

    auto add_sense = [&](CLI::App* cmd) {
        cmd->add_option("--sense", sense_text, "min or max")
            ->required()
            ->check(CLI::IsMember({"min", "max"}));
    };

    CLI::App* graph = app.add_subcommand("graph", "build a cone-partition graph and export it");
    graph->add_option("--n", n, "number of graph vertices")->required();
    add_sense(graph);
    graph->add_flag("--stats", stats, "emit the JSON stats document");
    graph->add_option("--export", export_format, "dot, csv or json")
        ->check(CLI::IsMember({"dot", "csv", "json"}));
    graph->add_option("--out", out_path, "write data here instead of stdout");
    graph->add_option("--threads", threads, "worker threads (0 = all cores)");
    graph->add_option("--cap-n", cap_n, "refuse graph construction above this n");
    graph->add_option("--cap-clique", cap_clique, "refuse clique search above this n");

    CLI::App* adj = app.add_subcommand("adjacent", "decide cone adjacency for a pair of cuts");
    adj->add_option("--n", n, "number of graph vertices")->required();
    adj->add_option("--x", x_list, "first cut, comma-separated vertices")->required();
    adj->add_option("--y", y_list, "second cut, comma-separated vertices")->required();
    add_sense(adj);
    adj->add_flag("--certify", certify, "print a verified witness weight vector");
    adj->add_flag("--oracle", oracle, "cross-check the verdict against the exact LP");

    CLI::App* membership = app.add_subcommand("membership",
                                              "list the cones containing a weight vector");
    membership->add_option("--instance", instance_path, "instance file")->required();
    add_sense(membership);

    CLI::App* solve = app.add_subcommand("solve", "optimize a cut on an instance");
    solve->add_option("--instance", instance_path, "instance file")->required();
    add_sense(solve);
    solve->add_option("--method", method, "brute or walk")
        ->check(CLI::IsMember({"brute", "walk"}));
    solve->add_option("--start", start_list, "start cut for the walk method");

    CLI::App* walk = app.add_subcommand("walk", "run local search and dump the trace as JSONL");
    walk->add_option("--instance", instance_path, "instance file")->required();
    add_sense(walk);
    walk->add_option("--start", start_list, "start cut, comma-separated vertices");
    walk->add_option("--out", out_path, "write the trace here instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run every structural check at one n");
    verify->add_option("--n", n, "number of graph vertices")->required();
    verify->add_option("--threads", threads, "worker threads (0 = all cores)");
    verify->add_option("--cap-n", cap_n, "refuse graph construction above this n");
    verify->add_option("--cap-lp", cap_lp, "skip LP cross-checks above this n");
    verify->add_option("--cap-clique", cap_clique, "skip clique search above this n");

    CLI::App* export_lp = app.add_subcommand("export-lp", "dump the adjacency LP for a pair");
    export_lp->add_option("--n", n, "number of graph vertices")->required();
    export_lp->add_option("--x", x_list, "first cut")->required();
    export_lp->add_option("--y", y_list, "second cut")->required();
    add_sense(export_lp);
    export_lp->add_option("--out", out_path, "write the dump here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Sense sense = parse_sense(sense_text);
        if (graph->parsed())
            return run_graph(n, sense, stats, export_format, out_path, threads, cap_n,
                             cap_clique);
        if (adj->parsed()) return run_adjacent(n, x_list, y_list, sense, certify, oracle);
        if (membership->parsed()) {
            print_optima(parse_instance_file(instance_path), sense);
            return 0;
        }
        if (solve->parsed())
            return run_solve(parse_instance_file(instance_path), sense, method, start_list);
        if (walk->parsed())
            return run_walk(parse_instance_file(instance_path), sense, start_list, out_path);
        if (verify->parsed()) {
            VerifyOptions opts;
            opts.threads = threads;
            opts.graph_cap = cap_n;
            opts.lp_cap = cap_lp;
            opts.clique_cap = cap_clique;
            return run_verify(n, opts);
        }
        if (export_lp->parsed()) return run_export_lp(n, x_list, y_list, sense, out_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
