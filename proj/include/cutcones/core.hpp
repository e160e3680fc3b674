#ifndef CUTCONES_CORE_HPP
#define CUTCONES_CORE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cutcones/bitset.hpp"
#include "cutcones/rational.hpp"

namespace cutcones {

/// Selects between the min-cut and max-cut cone partitions of the positive
/// orthant.
enum class Sense { Min, Max };

inline const char* sense_name(Sense s) { return s == Sense::Min ? "min" : "max"; }

/// Vertex subset of K_n as a bitmask, bit v = vertex v.
using VertexMask = std::uint32_t;

inline constexpr int kMaxVertices = 25;

inline VertexMask full_mask(int n) { return (VertexMask{1} << n) - 1; }

/// Number of edges of K_n.
inline int edge_count(int n) { return n * (n - 1) / 2; }

/// Rank of the pair (i,j), i < j, in lexicographic order over all vertex
/// pairs of K_n. This fixes the coordinate order of R^d for cut vectors,
/// weight vectors and LP columns.
inline int edge_index(int i, int j, int n) {
    if (n < 2 || n > kMaxVertices) throw std::invalid_argument("edge_index: bad vertex count");
    if (i < 0 || j <= i || j >= n) throw std::invalid_argument("edge_index: need 0 <= i < j < n");
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Inverse of edge_index.
inline std::pair<int, int> edge_vertices(int index, int n) {
    if (index < 0 || index >= edge_count(n)) throw std::invalid_argument("edge_vertices: index out of range");
    int i = 0;
    while (index >= n - 1 - i) {
        index -= n - 1 - i;
        ++i;
    }
    return {i, i + 1 + index};
}

/// True iff edge {i,j} crosses the partition given by side mask.
inline bool edge_in_cut(VertexMask side, int i, int j) {
    return (((side >> i) ^ (side >> j)) & 1u) != 0;
}

/// A nonempty cut of K_n, identified with its complement. Stored mask is the
/// side not containing vertex 0, so distinct cuts are distinct masks and the
/// canonical masks shifted down one bit enumerate 1 .. 2^{n-1}-1.
class Cut {
public:
    int n() const { return n_; }
    VertexMask mask() const { return mask_; }
    VertexMask complement_mask() const { return full_mask(n_) ^ mask_; }

    /// min(|S|, n - |S|): the size of the smaller side of the partition.
    int cardinality() const {
        int p = std::popcount(mask_);
        return p < n_ - p ? p : n_ - p;
    }

    /// Position in enumerate_cuts(n): 0 .. 2^{n-1}-2.
    std::size_t ordinal() const { return (mask_ >> 1) - 1; }

    friend bool operator==(const Cut&, const Cut&) = default;
    friend bool operator<(const Cut& a, const Cut& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.mask_ < b.mask_;
    }

    friend Cut canonicalize(VertexMask side, int n);
    friend std::vector<Cut> enumerate_cuts(int n);

private:
    Cut(int n, VertexMask mask) : n_(n), mask_(mask) {}
    int n_;
    VertexMask mask_;
};

/// Canonical cut for an arbitrary proper nonempty side. The side containing
/// vertex 0 is replaced by its complement.
inline Cut canonicalize(VertexMask side, int n) {
    if (n < 2 || n > kMaxVertices) throw std::invalid_argument("canonicalize: bad vertex count");
    if (side == 0 || side == full_mask(n)) throw std::invalid_argument("canonicalize: side must be a proper nonempty subset");
    if (side & ~full_mask(n)) throw std::invalid_argument("canonicalize: vertex out of range");
    if (side & 1u) side ^= full_mask(n);
    return Cut(n, side);
}

/// All 2^{n-1}-1 canonical cuts in increasing mask order.
inline std::vector<Cut> enumerate_cuts(int n) {
    if (n < 2 || n > kMaxVertices) throw std::invalid_argument("enumerate_cuts: bad vertex count");
    std::vector<Cut> cuts;
    cuts.reserve((std::size_t{1} << (n - 1)) - 1);
    for (VertexMask s = 1; s < (VertexMask{1} << (n - 1)); ++s)
        cuts.push_back(Cut(n, s << 1));
    return cuts;
}

/// 0/1 characteristic vector of a cut over the d lexicographic edge
/// coordinates. Equal for a cut and its complement.
class CutVector {
public:
    CutVector(int n, VertexMask side) : n_(n), bits_(edge_count(n)) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (edge_in_cut(side, i, j)) bits_.set(edge_index(i, j, n));
    }

    int n() const { return n_; }
    int dimension() const { return static_cast<int>(bits_.size()); }
    bool test(int edge) const { return bits_.test(edge); }
    const Bitset& bits() const { return bits_; }

    friend bool operator==(const CutVector&, const CutVector&) = default;

private:
    int n_;
    Bitset bits_;
};

inline CutVector cut_vector(const Cut& x) { return CutVector(x.n(), x.mask()); }

/// Weighted K_n instance with exact non-negative rational edge weights.
class Instance {
public:
    Instance(int n, std::vector<Rational> weights) : n_(n), weights_(std::move(weights)) {
        if (n < 2 || n > kMaxVertices) throw std::invalid_argument("instance: bad vertex count");
        if (static_cast<int>(weights_.size()) != edge_count(n)) throw std::invalid_argument("instance: weight vector has wrong length");
        for (const Rational& w : weights_)
            if (w < 0) throw std::invalid_argument("instance: negative weight");
    }

    /// K_n with every edge weight w.
    static Instance uniform(int n, const Rational& w) {
        return Instance(n, std::vector<Rational>(edge_count(n), w));
    }

    int n() const { return n_; }
    const std::vector<Rational>& weights() const { return weights_; }
    /// Symmetric accessor: weight(i, j) == weight(j, i).
    const Rational& weight(int i, int j) const {
        if (i > j) std::swap(i, j);
        return weights_[edge_index(i, j, n_)];
    }

private:
    int n_;
    std::vector<Rational> weights_;
};

/// Total weight of the edges separated by the side mask. Complement
/// invariant, so defined on cuts.
inline Rational cut_value(const Instance& inst, VertexMask side) {
    Rational total = 0;
    int n = inst.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge_in_cut(side, i, j)) total += inst.weight(i, j);
    return total;
}

inline Rational cut_value(const Instance& inst, const Cut& x) {
    if (inst.n() != x.n()) throw std::invalid_argument("cut_value: instance and cut disagree on n");
    return cut_value(inst, x.mask());
}

/// <w, v>: same value as cut_value along the other route.
inline Rational dot(const std::vector<Rational>& weights, const CutVector& v) {
    if (static_cast<int>(weights.size()) != v.dimension())
        throw std::invalid_argument("dot: dimension mismatch");
    Rational total = 0;
    v.bits().for_each_set([&](std::size_t e) { total += weights[e]; });
    return total;
}

/// "1,2,5" style vertex list of a side mask, ascending.
inline std::string format_vertex_list(VertexMask side) {
    std::string out;
    for (int v = 0; side >> v; ++v) {
        if ((side >> v) & 1u) {
            if (!out.empty()) out += ',';
            out += std::to_string(v);
        }
    }
    return out;
}

} // namespace cutcones

#endif // CUTCONES_CORE_HPP
