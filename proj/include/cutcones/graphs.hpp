#ifndef CUTCONES_GRAPHS_HPP
#define CUTCONES_GRAPHS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cutcones/adjacency.hpp"
#include "cutcones/bitset.hpp"
#include "cutcones/core.hpp"
#include "cutcones/parallel.hpp"

namespace cutcones {

/// Graph on the 2^{n-1}-1 canonical cuts with an edge wherever the two
/// cones share a facet in the chosen sense. Vertex i is the cut with
/// ordinal i. Immutable once built; safe for concurrent reads.
class ConePartitionGraph {
public:
    ConePartitionGraph(int n, Sense sense, std::vector<Bitset> rows)
        : n_(n), sense_(sense), rows_(std::move(rows)) {}

    int n() const { return n_; }
    Sense sense() const { return sense_; }
    int vertex_count() const { return static_cast<int>(rows_.size()); }

    Cut cut_at(int index) const {
        if (index < 0 || index >= vertex_count())
            throw std::out_of_range("ConePartitionGraph: vertex index out of range");
        return canonicalize(static_cast<VertexMask>(index + 1) << 1, n_);
    }

    bool edge(int i, int j) const { return rows_[i].test(j); }
    const Bitset& neighbors(int i) const { return rows_[i]; }
    int degree(int i) const { return static_cast<int>(rows_[i].count()); }

    std::int64_t edge_total() const {
        std::int64_t twice = 0;
        for (const Bitset& row : rows_) twice += static_cast<std::int64_t>(row.count());
        return twice / 2;
    }

private:
    int n_;
    Sense sense_;
    std::vector<Bitset> rows_;
};

/// All-pairs adjacency by the combinatorial criterion, parallelized over
/// vertex rows.
inline ConePartitionGraph build_graph(int n, Sense sense, int threads = 0, int cap = 12) {
    if (n < 2 || n > kMaxVertices)
        throw std::invalid_argument("build_graph: n must be between 2 and " +
                                    std::to_string(kMaxVertices));
    if (n > cap)
        throw std::invalid_argument("build_graph: n=" + std::to_string(n) +
                                    " exceeds the cap of " + std::to_string(cap) +
                                    "; raise the cap to proceed");
    std::vector<Cut> cuts = enumerate_cuts(n);
    std::size_t count = cuts.size();
    std::vector<Bitset> rows(count, Bitset(count));
    parallel_for(count, [&](std::size_t i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (j == i) continue;
            if (adjacent(cuts[i], cuts[j], sense).adjacent) rows[i].set(j);
        }
    }, threads);
    return ConePartitionGraph(n, sense, std::move(rows));
}

inline void require_cardinality_range(int n, int k, const char* who) {
    if (k < 1 || k > n / 2)
        throw std::invalid_argument(std::string(who) +
                                    ": cardinality must lie in [1, floor(n/2)]");
}

/// Closed-form cone degree for a cut of cardinality k.
inline std::int64_t degree_formula(int n, int k, Sense sense) {
    require_cardinality_range(n, k, "degree_formula");
    std::int64_t pk = std::int64_t{1} << k;
    std::int64_t pnk = std::int64_t{1} << (n - k);
    if (sense == Sense::Min) return pnk + pk - 4;
    if (k == 1) return n - 1;
    return (std::int64_t{1} << (n - 1)) - pk - pnk + 2 + n;
}

/// Number of cuts crossing a fixed cut of cardinality k in K_n.
inline std::int64_t crossing_count(int n, int k) {
    require_cardinality_range(n, k, "crossing_count");
    return ((std::int64_t{1} << k) - 2) * ((std::int64_t{1} << (n - k)) - 2) / 2;
}

/// Per-vertex eccentricities by BFS, frontier expansion word-parallel over
/// adjacency rows. An unreachable vertex makes the eccentricity -1.
inline std::vector<int> eccentricities(const ConePartitionGraph& g, int threads = 0) {
    int count = g.vertex_count();
    std::vector<int> ecc(count, 0);
    parallel_for(static_cast<std::size_t>(count), [&](std::size_t s) {
        Bitset seen(count);
        seen.set(s);
        Bitset frontier = seen;
        int depth = 0;
        while (static_cast<int>(seen.count()) < count) {
            Bitset next(count);
            frontier.for_each_set([&](std::size_t v) { next |= g.neighbors(v); });
            next.and_not(seen);
            if (next.none()) {
                depth = -1;  // disconnected
                break;
            }
            seen |= next;
            frontier = std::move(next);
            ++depth;
        }
        ecc[s] = depth;
    }, threads);
    return ecc;
}

inline int diameter(const ConePartitionGraph& g, int threads = 0) {
    int best = 0;
    for (int e : eccentricities(g, threads)) {
        if (e < 0) return -1;
        if (e > best) best = e;
    }
    return best;
}

/// For a pair whose max-sense cones are not adjacent, builds a cut adjacent
/// to both. After relabeling the pair as nested sets A within B, the rule
/// is: inner side bigger than one vertex -> complement of B plus the
/// smallest inner vertex (crosses both); else outer side bigger than one ->
/// A plus the smallest outer vertex (one-element step from A, crosses B);
/// else both singletons -> their union (one-element step from each).
inline Cut middle_cut(const Cut& x, const Cut& y) {
    require_same_n(x, y, "middle_cut");
    if (x == y) throw std::invalid_argument("middle_cut: cuts must be distinct");
    if (adjacent(x, y, Sense::Max).adjacent)
        throw std::invalid_argument("middle_cut: cones already adjacent, nothing to bridge");
    auto labeling = detail::nested_labeling(x, y, false);
    if (!labeling) throw std::logic_error("middle_cut: non-crossing pair must nest");
    auto [a, b] = *labeling;
    int n = x.n();
    VertexMask outer = full_mask(n) & ~b;
    VertexMask z;
    if (std::popcount(a) > 1)
        z = outer | (a & -a);
    else if (std::popcount(outer) > 1)
        z = a | (outer & -outer);
    else
        z = a | outer;
    return canonicalize(z, n);
}

namespace detail {

/// Tomita-style maximum-clique search: greedy colouring of the candidate
/// set gives the bound, candidates are expanded in decreasing colour order.
class CliqueSearch {
public:
    explicit CliqueSearch(const ConePartitionGraph& g) : g_(g) {}

    int run() {
        int count = g_.vertex_count();
        if (count == 0) return 0;
        best_ = 1;
        Bitset all(count);
        for (int v = 0; v < count; ++v) all.set(v);
        expand(all, 0);
        return best_;
    }

private:
    void expand(Bitset candidates, int depth) {
        if (candidates.none()) {
            if (depth > best_) best_ = depth;
            return;
        }
        std::vector<std::size_t> order;
        std::vector<int> colour;
        Bitset uncoloured = candidates;
        int classes = 0;
        while (uncoloured.any()) {
            ++classes;
            Bitset available = uncoloured;
            while (available.any()) {
                std::size_t v = available.find_first();
                available.reset(v);
                uncoloured.reset(v);
                order.push_back(v);
                colour.push_back(classes);
                available.and_not(g_.neighbors(v));
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (depth + colour[i] <= best_) return;
            std::size_t v = order[i];
            Bitset next = candidates;
            next &= g_.neighbors(v);
            expand(std::move(next), depth + 1);
            candidates.reset(v);
        }
    }

    const ConePartitionGraph& g_;
    int best_ = 0;
};

} // namespace detail

/// Exact maximum clique size.
inline int clique_number(const ConePartitionGraph& g, int cap = 8) {
    if (g.n() > cap)
        throw std::invalid_argument("clique_number: n=" + std::to_string(g.n()) +
                                    " exceeds the cap of " + std::to_string(cap) +
                                    "; raise the cap to proceed");
    return detail::CliqueSearch(g).run();
}

/// Closed-form clique number: 2n-3 in the min sense; in the max sense the
/// balanced-cut binomial, C(n, n/2-1) for even n and C(n, (n-1)/2) for odd.
inline std::int64_t clique_formula(int n, Sense sense) {
    if (n < 3) throw std::invalid_argument("clique_formula: needs n >= 3");
    if (sense == Sense::Min) return 2 * std::int64_t{n} - 3;
    int k = n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2;
    std::int64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

} // namespace cutcones

#endif // CUTCONES_GRAPHS_HPP
