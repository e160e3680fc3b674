#ifndef CUTCONES_EXPORT_HPP
#define CUTCONES_EXPORT_HPP

#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cutcones/graphs.hpp"
#include "cutcones/verify.hpp"

namespace cutcones {

/// Undirected DOT graph; vertex labels are the canonical vertex sets.
inline std::string dot_export(const ConePartitionGraph& g) {
    std::ostringstream out;
    out << "graph cutcones_" << sense_name(g.sense()) << "_" << g.n() << " {\n";
    out << "  node [shape=ellipse];\n";
    for (int i = 0; i < g.vertex_count(); ++i)
        out << "  v" << i << " [label=\"{" << format_vertex_list(g.cut_at(i).mask())
            << "}\"];\n";
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (g.edge(i, j)) out << "  v" << i << " -- v" << j << ";\n";
    out << "}\n";
    return out.str();
}

/// Edge list with indices and quoted vertex sets, one row per graph edge.
inline std::string csv_export(const ConePartitionGraph& g) {
    std::ostringstream out;
    out << "source,target,source_cut,target_cut\n";
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (g.edge(i, j))
                out << i << "," << j << ",\"" << format_vertex_list(g.cut_at(i).mask())
                    << "\",\"" << format_vertex_list(g.cut_at(j).mask()) << "\"\n";
    return out.str();
}

/// Self-contained stats document with the structural checks embedded.
inline nlohmann::json stats_json(const ConePartitionGraph& g, int clique_cap = 8,
                                 int threads = 0) {
    nlohmann::json doc;
    doc["n"] = g.n();
    doc["sense"] = sense_name(g.sense());
    doc["vertexCount"] = g.vertex_count();
    doc["edgeCount"] = g.edge_total();

    std::map<int, std::int64_t> degree_by_card;
    for (int i = 0; i < g.vertex_count(); ++i)
        degree_by_card.emplace(g.cut_at(i).cardinality(), g.degree(i));
    nlohmann::json degrees = nlohmann::json::object();
    for (auto [k, deg] : degree_by_card) degrees[std::to_string(k)] = deg;
    doc["degreeByCardinality"] = degrees;

    doc["diameter"] = diameter(g, threads);
    if (g.n() <= clique_cap)
        doc["cliqueNumber"] = clique_number(g, clique_cap);
    else
        doc["cliqueNumber"] = nullptr;

    std::vector<std::string> notices;
    nlohmann::json checks = nlohmann::json::array();
    for (const Check& c : graph_checks(g, clique_cap, threads, &notices)) {
        nlohmann::json item;
        item["claim"] = c.claim;
        item["expected"] = c.expected;
        item["actual"] = c.actual;
        item["pass"] = c.pass;
        checks.push_back(item);
    }
    doc["checks"] = checks;
    if (!notices.empty()) doc["notices"] = notices;
    return doc;
}

} // namespace cutcones

#endif // CUTCONES_EXPORT_HPP
