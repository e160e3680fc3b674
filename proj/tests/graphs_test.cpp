#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "cutcones/export.hpp"
#include "cutcones/graphs.hpp"
#include "cutcones/verify.hpp"

using namespace cutcones;

namespace {

Cut cut_of(std::initializer_list<int> vertices, int n) {
    VertexMask m = 0;
    for (int v : vertices) m |= VertexMask{1} << v;
    return canonicalize(m, n);
}

/// Plain recursive maximum clique, no bounds beyond feasibility; the
/// independent yardstick for the branch-and-bound.
int naive_clique(const ConePartitionGraph& g) {
    int count = g.vertex_count();
    int best = 0;
    auto grow = [&](auto&& self, int v, Bitset allowed, int size) -> void {
        best = std::max(best, size);
        for (int u = v; u < count; ++u) {
            if (!allowed.test(u)) continue;
            Bitset next = allowed;
            next &= g.neighbors(u);
            self(self, u + 1, std::move(next), size + 1);
        }
    };
    Bitset all(count);
    for (int v = 0; v < count; ++v) all.set(v);
    grow(grow, 0, all, 0);
    return best;
}

} // namespace

TEST(BuildGraph, EdgesMatchTheCriterion) {
    for (int n : {4, 5})
        for (Sense s : {Sense::Min, Sense::Max}) {
            ConePartitionGraph g = build_graph(n, s);
            ASSERT_EQ(g.vertex_count(), (1 << (n - 1)) - 1);
            for (int i = 0; i < g.vertex_count(); ++i) {
                EXPECT_FALSE(g.edge(i, i));
                for (int j = 0; j < g.vertex_count(); ++j) {
                    if (i == j) continue;
                    EXPECT_EQ(g.edge(i, j), g.edge(j, i));
                    EXPECT_EQ(g.edge(i, j), adjacent(g.cut_at(i), g.cut_at(j), s).adjacent);
                }
            }
        }
}

TEST(BuildGraph, VertexOrderIsCanonical) {
    ConePartitionGraph g = build_graph(4, Sense::Min);
    EXPECT_EQ(g.cut_at(0).mask(), 0b0010u);
    EXPECT_EQ(g.cut_at(6).mask(), 0b1110u);
    EXPECT_THROW(g.cut_at(7), std::out_of_range);
}

TEST(BuildGraph, CapRefusal) {
    EXPECT_THROW(build_graph(13, Sense::Min), std::invalid_argument);
    EXPECT_NO_THROW(build_graph(9, Sense::Min, 0, 9));
    EXPECT_THROW(build_graph(1, Sense::Min), std::invalid_argument);
}

TEST(DegreeFormula, ClosedFormValues) {
    EXPECT_EQ(degree_formula(6, 2, Sense::Min), 16);
    EXPECT_EQ(degree_formula(6, 1, Sense::Max), 5);
    EXPECT_EQ(degree_formula(6, 3, Sense::Max), 24);
    EXPECT_EQ(degree_formula(4, 1, Sense::Min), 6);
    EXPECT_EQ(degree_formula(4, 2, Sense::Min), 4);
    EXPECT_THROW(degree_formula(6, 0, Sense::Min), std::invalid_argument);
    EXPECT_THROW(degree_formula(6, 4, Sense::Min), std::invalid_argument);
}

TEST(DegreeFormula, MatchesCountedDegrees) {
    for (int n = 4; n <= 8; ++n)
        for (Sense s : {Sense::Min, Sense::Max}) {
            ConePartitionGraph g = build_graph(n, s);
            for (int i = 0; i < g.vertex_count(); ++i) {
                int k = g.cut_at(i).cardinality();
                ASSERT_EQ(g.degree(i), degree_formula(n, k, s))
                    << "n=" << n << " " << sense_name(s) << " k=" << k;
            }
        }
}

TEST(DegreeFormula, K4DegreeMultisets) {
    // four cardinality-1 cuts and three balanced ones
    ConePartitionGraph gmin = build_graph(4, Sense::Min);
    std::multiset<int> min_degrees;
    for (int i = 0; i < 7; ++i) min_degrees.insert(gmin.degree(i));
    EXPECT_EQ(min_degrees, (std::multiset<int>{4, 4, 4, 6, 6, 6, 6}));

    ConePartitionGraph gmax = build_graph(4, Sense::Max);
    std::multiset<int> max_degrees;
    for (int i = 0; i < 7; ++i) max_degrees.insert(gmax.degree(i));
    EXPECT_EQ(max_degrees, (std::multiset<int>{3, 3, 3, 3, 6, 6, 6}));
}

TEST(DegreeFormula, BoundsFromTheBalancedAndSingletonCases) {
    for (int n = 4; n <= 8; ++n) {
        std::int64_t min_lo = (std::int64_t{1} << ((n + 1) / 2)) +
                              (std::int64_t{1} << (n / 2)) - 4;
        std::int64_t min_hi = (std::int64_t{1} << (n - 1)) - 2;
        std::int64_t max_hi = (std::int64_t{1} << (n - 1)) -
                              (std::int64_t{1} << ((n + 1) / 2)) -
                              (std::int64_t{1} << (n / 2)) + 2 + n;
        for (int k = 1; k <= n / 2; ++k) {
            EXPECT_GE(degree_formula(n, k, Sense::Min), min_lo);
            EXPECT_LE(degree_formula(n, k, Sense::Min), min_hi);
            EXPECT_GE(degree_formula(n, k, Sense::Max), n - 1);
            EXPECT_LE(degree_formula(n, k, Sense::Max), max_hi);
        }
    }
}

TEST(CrossingCount, FormulaAndExhaustiveAgree) {
    EXPECT_EQ(crossing_count(6, 1), 0);
    EXPECT_EQ(crossing_count(6, 2), 14);
    EXPECT_EQ(crossing_count(6, 3), 18);
    EXPECT_THROW(crossing_count(6, 0), std::invalid_argument);
    for (int n = 4; n <= 7; ++n) {
        std::vector<Cut> cuts = enumerate_cuts(n);
        for (const Cut& x : cuts) {
            std::int64_t crossings = 0;
            for (const Cut& z : cuts)
                if (!(z == x) && is_crossing(x, z)) ++crossings;
            ASSERT_EQ(crossings, crossing_count(n, x.cardinality()))
                << "n=" << n << " cut " << format_vertex_list(x.mask());
        }
    }
}

TEST(Diameter, TriangleAtThreeTwoBeyond) {
    for (Sense s : {Sense::Min, Sense::Max}) {
        EXPECT_EQ(diameter(build_graph(3, s)), 1);
        for (int n = 4; n <= 8; ++n)
            EXPECT_EQ(diameter(build_graph(n, s)), 2) << "n=" << n << " " << sense_name(s);
    }
}

TEST(Eccentricities, BalancedMaxCutsSeeEverythingInOneStep) {
    // on K_4 the three balanced cuts have full max-degree, eccentricity 1
    ConePartitionGraph g = build_graph(4, Sense::Max);
    std::vector<int> ecc = eccentricities(g);
    std::multiset<int> values(ecc.begin(), ecc.end());
    EXPECT_EQ(values, (std::multiset<int>{1, 1, 1, 2, 2, 2, 2}));

    // at n=6 every eccentricity is exactly 2
    std::vector<int> ecc6 = eccentricities(build_graph(6, Sense::Max));
    for (int e : ecc6) EXPECT_EQ(e, 2);
}

TEST(MiddleCut, SpecificBridges) {
    // nested with a big inner side: {1,2} inside {1,2,3,4} on K_6
    Cut z = middle_cut(cut_of({1, 2}, 6), cut_of({1, 2, 3, 4}, 6));
    EXPECT_EQ(z.mask(), cut_of({0, 1, 5}, 6).mask());  // canonical {2,3,4}
    // singleton inner side, big outer side: {1} inside {1,2,3} on K_5
    Cut z2 = middle_cut(cut_of({1}, 5), cut_of({1, 2, 3}, 5));
    EXPECT_EQ(z2.mask(), cut_of({0, 1}, 5).mask());    // canonical {2,3,4}
    // both borders single: {1} and complement {2} on K_4
    Cut z3 = middle_cut(cut_of({1}, 4), cut_of({0, 1, 3}, 4));
    EXPECT_EQ(z3.mask(), cut_of({1, 2}, 4).mask());
}

TEST(MiddleCut, BridgesEveryNonAdjacentPair) {
    for (int n = 4; n <= 6; ++n) {
        std::vector<Cut> cuts = enumerate_cuts(n);
        for (std::size_t i = 0; i < cuts.size(); ++i)
            for (std::size_t j = i + 1; j < cuts.size(); ++j) {
                if (adjacent(cuts[i], cuts[j], Sense::Max).adjacent) continue;
                Cut z = middle_cut(cuts[i], cuts[j]);
                EXPECT_FALSE(z == cuts[i]);
                EXPECT_FALSE(z == cuts[j]);
                EXPECT_TRUE(adjacent(cuts[i], z, Sense::Max).adjacent);
                EXPECT_TRUE(adjacent(z, cuts[j], Sense::Max).adjacent);
            }
    }
}

TEST(MiddleCut, RefusesAdjacentInputs) {
    EXPECT_THROW(middle_cut(cut_of({1, 2}, 4), cut_of({2, 3}, 4)), std::invalid_argument);
    EXPECT_THROW(middle_cut(cut_of({1}, 4), cut_of({1, 2}, 4)), std::invalid_argument);
    Cut a = cut_of({1}, 4);
    EXPECT_THROW(middle_cut(a, a), std::invalid_argument);
}

TEST(CliqueNumber, AgreesWithNaiveSearchOnSmallGraphs) {
    for (int n : {4, 5})
        for (Sense s : {Sense::Min, Sense::Max}) {
            ConePartitionGraph g = build_graph(n, s);
            EXPECT_EQ(clique_number(g), naive_clique(g));
        }
}

TEST(CliqueNumber, TableValues) {
    EXPECT_EQ(clique_number(build_graph(5, Sense::Min)), 7);
    EXPECT_EQ(clique_number(build_graph(6, Sense::Max)), 15);
    EXPECT_EQ(clique_number(build_graph(7, Sense::Max)), 35);
    for (int n = 4; n <= 8; ++n) {
        EXPECT_EQ(clique_number(build_graph(n, Sense::Min)), 2 * n - 3);
        EXPECT_EQ(clique_number(build_graph(n, Sense::Max)), clique_formula(n, Sense::Max));
    }
    // the even/odd binomial split
    EXPECT_EQ(clique_formula(4, Sense::Max), 4);    // C(4,1)
    EXPECT_EQ(clique_formula(5, Sense::Max), 10);   // C(5,2)
    EXPECT_EQ(clique_formula(6, Sense::Max), 15);   // C(6,2)
    EXPECT_EQ(clique_formula(7, Sense::Max), 35);   // C(7,3)
    EXPECT_EQ(clique_formula(8, Sense::Max), 56);   // C(8,3)
}

TEST(CliqueNumber, CapRefusal) {
    ConePartitionGraph g = build_graph(9, Sense::Min, 0, 9);
    EXPECT_THROW(clique_number(g, 8), std::invalid_argument);
}

TEST(Exports, DotNamesVerticesBySet) {
    ConePartitionGraph g = build_graph(4, Sense::Max);
    std::string dot = dot_export(g);
    EXPECT_NE(dot.find("graph cutcones_max_4 {"), std::string::npos);
    EXPECT_NE(dot.find("v0 [label=\"{1}\"];"), std::string::npos);
    EXPECT_NE(dot.find("v6 [label=\"{1,2,3}\"];"), std::string::npos);
    EXPECT_NE(dot.find(" -- "), std::string::npos);
    EXPECT_EQ(dot, dot_export(g));  // byte-deterministic
}

TEST(Exports, CsvHasOneRowPerEdge) {
    ConePartitionGraph g = build_graph(4, Sense::Min);
    std::string csv = csv_export(g);
    std::int64_t rows = std::count(csv.begin(), csv.end(), '\n');
    EXPECT_EQ(rows, g.edge_total() + 1);  // header + edges
    EXPECT_NE(csv.find("\"1,2\""), std::string::npos);
}

TEST(Exports, StatsDocumentCarriesChecks) {
    ConePartitionGraph g = build_graph(5, Sense::Max);
    nlohmann::json doc = stats_json(g);
    EXPECT_EQ(doc["n"], 5);
    EXPECT_EQ(doc["sense"], "max");
    EXPECT_EQ(doc["vertexCount"], 15);
    EXPECT_EQ(doc["diameter"], 2);
    EXPECT_EQ(doc["cliqueNumber"], 10);
    EXPECT_EQ(doc["degreeByCardinality"]["1"], 4);
    EXPECT_EQ(doc["degreeByCardinality"]["2"], 11);
    ASSERT_TRUE(doc["checks"].is_array());
    for (const auto& check : doc["checks"]) EXPECT_TRUE(check["pass"].get<bool>());
}

TEST(VerifyAll, FourAndFivePassEverything) {
    for (int n : {4, 5}) {
        VerifyReport report = verify_all(n);
        EXPECT_TRUE(report.all_pass()) << format_report(report);
        std::string text = format_report(report);
        EXPECT_NE(text.find("[PASS]"), std::string::npos);
        EXPECT_EQ(text.find("[FAIL]"), std::string::npos);
        EXPECT_NE(text.find("all checks passed"), std::string::npos);
    }
}

TEST(VerifyAll, CapsTurnIntoNotices) {
    VerifyOptions opts;
    opts.lp_cap = 3;
    opts.skeleton_cap = 3;
    VerifyReport report = verify_all(4, opts);
    EXPECT_TRUE(report.all_pass());
    ASSERT_EQ(report.notices.size(), 2u);
    EXPECT_NE(report.notices[0].find("skipped"), std::string::npos);
}
