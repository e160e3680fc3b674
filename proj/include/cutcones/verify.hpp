#ifndef CUTCONES_VERIFY_HPP
#define CUTCONES_VERIFY_HPP

#include <atomic>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cutcones/adjacency.hpp"
#include "cutcones/graphs.hpp"
#include "cutcones/oracle.hpp"
#include "cutcones/parallel.hpp"

namespace cutcones {

/// One verified claim with the expected and computed values.
struct Check {
    std::string claim;
    std::string expected;
    std::string actual;
    bool pass;
};

inline Check make_check(std::string claim, std::int64_t expected, std::int64_t actual) {
    return Check{std::move(claim), std::to_string(expected), std::to_string(actual),
                 expected == actual};
}

struct VerifyOptions {
    int threads = 0;
    int graph_cap = 12;
    int lp_cap = 6;
    int clique_cap = 8;
    int skeleton_cap = 5;
};

struct VerifyReport {
    int n = 0;
    std::vector<Check> checks;
    std::vector<std::string> notices;

    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Structural checks on one built graph: counted degrees against the closed
/// form per cardinality, counted crossing cuts against the closed form,
/// diameter and eccentricities, and the clique number against the closed
/// form when within the cap.
inline std::vector<Check> graph_checks(const ConePartitionGraph& g, int clique_cap = 8,
                                       int threads = 0,
                                       std::vector<std::string>* notices = nullptr) {
    std::vector<Check> out;
    int n = g.n();
    int count = g.vertex_count();
    std::string tag = std::string(sense_name(g.sense())) + " n=" + std::to_string(n);

    std::map<int, std::int64_t> degree_by_card;
    bool uniform = true;
    for (int i = 0; i < count; ++i) {
        int k = g.cut_at(i).cardinality();
        auto [it, fresh] = degree_by_card.emplace(k, g.degree(i));
        if (!fresh && it->second != g.degree(i)) uniform = false;
    }
    out.push_back(Check{tag + " degrees uniform within each cardinality", "true",
                        uniform ? "true" : "false", uniform});
    if (n >= 3)
        for (auto [k, deg] : degree_by_card)
            out.push_back(make_check(tag + " degree at cardinality " + std::to_string(k),
                                     degree_formula(n, k, g.sense()), deg));

    if (n >= 3) {
        std::vector<Cut> cuts = enumerate_cuts(n);
        std::map<int, std::int64_t> crossing_by_card;
        bool crossing_uniform = true;
        for (int i = 0; i < count; ++i) {
            std::int64_t crossings = 0;
            for (int j = 0; j < count; ++j)
                if (j != i && is_crossing(cuts[i], cuts[j])) ++crossings;
            auto [it, fresh] = crossing_by_card.emplace(cuts[i].cardinality(), crossings);
            if (!fresh && it->second != crossings) crossing_uniform = false;
        }
        out.push_back(Check{tag + " crossing counts uniform within each cardinality", "true",
                            crossing_uniform ? "true" : "false", crossing_uniform});
        for (auto [k, crossings] : crossing_by_card)
            out.push_back(make_check(tag + " crossing cuts at cardinality " + std::to_string(k),
                                     crossing_count(n, k), crossings));
    }

    std::vector<int> ecc = eccentricities(g, threads);
    int diam = 0;
    for (int e : ecc) diam = e < 0 || diam < 0 ? -1 : std::max(diam, e);
    int expected_diam = n >= 4 ? 2 : n == 3 ? 1 : 0;
    out.push_back(make_check(tag + " diameter", expected_diam, diam));
    int ecc_lo = n <= 2 ? 0 : 1;
    bool ecc_ok = true;
    for (int e : ecc)
        if (e < ecc_lo || e > 2) ecc_ok = false;
    out.push_back(Check{tag + " eccentricities within [" + std::to_string(ecc_lo) + ",2]",
                        "true", ecc_ok ? "true" : "false", ecc_ok});

    if (n >= 3) {
        if (n <= clique_cap) {
            out.push_back(make_check(tag + " clique number", clique_formula(n, g.sense()),
                                     clique_number(g, clique_cap)));
        } else if (notices) {
            notices->push_back(tag + ": clique search skipped (n above cap " +
                               std::to_string(clique_cap) + ")");
        }
    }
    return out;
}

/// Compares the combinatorial adjacency criterion with the exact LP for
/// every pair of canonical cuts in both senses.
inline Check oracle_equivalence_check(int n, int threads = 0) {
    std::vector<Cut> cuts = enumerate_cuts(n);
    std::size_t count = cuts.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
    std::atomic<std::int64_t> mismatches{0};
    parallel_for(pairs.size(), [&](std::size_t p) {
        auto [i, j] = pairs[p];
        for (Sense s : {Sense::Min, Sense::Max})
            if (adjacent(cuts[i], cuts[j], s).adjacent != oracle_adjacent(cuts[i], cuts[j], s))
                mismatches.fetch_add(1);
    }, threads);
    return make_check("n=" + std::to_string(n) + " criterion vs LP oracle mismatches over " +
                          std::to_string(2 * pairs.size()) + " pair-senses",
                      0, mismatches.load());
}

/// The 1-skeleton of CUT(n) must be complete: every pair of cut-polytope
/// vertices (empty cut included) is LP-adjacent.
inline Check skeleton_completeness_check(int n, int threads = 0) {
    std::vector<VertexMask> reps = skeleton_vertices(n);
    std::vector<std::pair<VertexMask, VertexMask>> pairs;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) pairs.emplace_back(reps[i], reps[j]);
    std::atomic<std::int64_t> missing{0};
    parallel_for(pairs.size(), [&](std::size_t p) {
        if (!skeleton_adjacent(pairs[p].first, pairs[p].second, n)) missing.fetch_add(1);
    }, threads);
    return make_check("n=" + std::to_string(n) + " cut polytope skeleton non-adjacent pairs of " +
                          std::to_string(pairs.size()),
                      0, missing.load());
}

/// Runs the full battery at one n: structural checks on both cone-partition
/// graphs, the LP oracle equivalence when n is within the LP cap, and the
/// skeleton completeness when within its cap. Failures are reported, never
/// thrown.
inline VerifyReport verify_all(int n, VerifyOptions opts = {}) {
    VerifyReport report;
    report.n = n;
    for (Sense s : {Sense::Min, Sense::Max}) {
        ConePartitionGraph g = build_graph(n, s, opts.threads, opts.graph_cap);
        std::vector<Check> checks = graph_checks(g, opts.clique_cap, opts.threads,
                                                 &report.notices);
        report.checks.insert(report.checks.end(), checks.begin(), checks.end());
    }
    if (n <= opts.lp_cap)
        report.checks.push_back(oracle_equivalence_check(n, opts.threads));
    else
        report.notices.push_back("n=" + std::to_string(n) +
                                 ": LP oracle cross-check skipped (n above cap " +
                                 std::to_string(opts.lp_cap) + ")");
    if (n <= opts.skeleton_cap)
        report.checks.push_back(skeleton_completeness_check(n, opts.threads));
    else
        report.notices.push_back("n=" + std::to_string(n) +
                                 ": skeleton completeness skipped (n above cap " +
                                 std::to_string(opts.skeleton_cap) + ")");
    return report;
}

inline std::string format_report(const VerifyReport& report) {
    std::ostringstream out;
    for (const Check& c : report.checks)
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.claim << ": expected " << c.expected
            << ", got " << c.actual << "\n";
    for (const std::string& note : report.notices) out << "[SKIP] " << note << "\n";
    out << (report.all_pass() ? "all checks passed" : "CHECKS FAILED") << " (n="
        << report.n << ")\n";
    return out.str();
}

} // namespace cutcones

#endif // CUTCONES_VERIFY_HPP
