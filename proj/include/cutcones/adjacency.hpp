#ifndef CUTCONES_ADJACENCY_HPP
#define CUTCONES_ADJACENCY_HPP

#include <bit>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cutcones/core.hpp"
#include "cutcones/instance_io.hpp"

namespace cutcones {

/// Why a pair of cones is (or is not) adjacent. Min sense: adjacent iff the
/// cuts do not cross. Max sense: adjacent iff the cuts cross or some
/// labeling of the complement classes has symmetric difference one.
enum class AdjacencyReason { Crossing, NotCrossing, SymDiffOne, SymDiffLarge };

inline const char* reason_name(AdjacencyReason r) {
    switch (r) {
        case AdjacencyReason::Crossing: return "crossing";
        case AdjacencyReason::NotCrossing: return "not crossing";
        case AdjacencyReason::SymDiffOne: return "symmetric difference one";
        default: return "not crossing, symmetric difference > 1";
    }
}

struct AdjacencyVerdict {
    bool adjacent;
    AdjacencyReason reason;
};

inline void require_same_n(const Cut& x, const Cut& y, const char* who) {
    if (x.n() != y.n()) throw std::invalid_argument(std::string(who) + ": cuts live on different vertex counts");
}

/// Crossing cuts: intersection, both differences and the outside are all
/// nonempty. Complement flips only permute those four regions, so checking
/// the stored sides decides it for every labeling.
inline bool is_crossing(const Cut& x, const Cut& y) {
    require_same_n(x, y, "is_crossing");
    VertexMask a = x.mask(), b = y.mask(), all = full_mask(x.n());
    return (a & b) && (a & ~b) && (b & ~a) && (all & ~(a | b));
}

/// True iff some labeling of the two complement classes differs in exactly
/// one vertex; on stored masks that is |a ^ b| equal to 1 or n-1.
inline bool symdiff_one(const Cut& x, const Cut& y) {
    require_same_n(x, y, "symdiff_one");
    int s = std::popcount(x.mask() ^ y.mask());
    return s == 1 || s == x.n() - 1;
}

/// The combinatorial adjacency criterion. O(n) word operations.
inline AdjacencyVerdict adjacent(const Cut& x, const Cut& y, Sense sense) {
    require_same_n(x, y, "adjacent");
    if (x == y) throw std::invalid_argument("adjacent: cuts must be distinct");
    bool crossing = is_crossing(x, y);
    if (sense == Sense::Min)
        return {!crossing, crossing ? AdjacencyReason::Crossing : AdjacencyReason::NotCrossing};
    if (crossing) return {true, AdjacencyReason::Crossing};
    if (symdiff_one(x, y)) return {true, AdjacencyReason::SymDiffOne};
    return {false, AdjacencyReason::SymDiffLarge};
}

/// Explicit non-negative weight vector witnessing cone adjacency: the two
/// cuts tie and every other cut is strictly worse in the given sense.
struct Certificate {
    Instance weights;
    Cut x;
    Cut y;
    Sense sense;
};

namespace detail {

/// Smallest (A,B) with A a side of x, B a side of y and A a proper subset
/// of B, ordered lexicographically by (A,B) as mask integers. Optionally
/// restricted to |B \ A| = 1.
inline std::optional<std::pair<VertexMask, VertexMask>>
nested_labeling(const Cut& x, const Cut& y, bool one_element_gap) {
    VertexMask all = full_mask(x.n());
    std::optional<std::pair<VertexMask, VertexMask>> best;
    for (VertexMask a : {x.mask(), static_cast<VertexMask>(all ^ x.mask())})
        for (VertexMask b : {y.mask(), static_cast<VertexMask>(all ^ y.mask())}) {
            if ((a & ~b) != 0 || a == b) continue;
            if (one_element_gap && std::popcount(b & ~a) != 1) continue;
            if (!best || std::pair(a, b) < *best) best = {a, b};
        }
    return best;
}

inline Rational uniform_share(const Rational& total, VertexMask s, VertexMask t) {
    return total / (std::popcount(s) * std::popcount(t));
}

} // namespace detail

/// Weight vector from the nested-cuts construction: with A = inner side,
/// B \ A = middle, complement of B = outer, the A-middle and middle-outer
/// edge groups carry total weight 2 each, A-outer carries total 1, and every
/// within-group edge weighs 4. Both cuts then value 3, strictly below all
/// others.
inline Certificate min_certificate(const Cut& x, const Cut& y) {
    if (!adjacent(x, y, Sense::Min).adjacent)
        throw std::invalid_argument("min_certificate: cuts cross, cones are not adjacent");
    auto labeling = detail::nested_labeling(x, y, false);
    if (!labeling) throw std::logic_error("min_certificate: no nested labeling");
    auto [inner, outer_bound] = *labeling;
    int n = x.n();
    VertexMask mid = outer_bound & ~inner;
    VertexMask outer = full_mask(n) & ~outer_bound;

    Rational im = detail::uniform_share(2, inner, mid);
    Rational mo = detail::uniform_share(2, mid, outer);
    Rational io = detail::uniform_share(1, inner, outer);

    std::vector<Rational> w(edge_count(n), Rational(4));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            VertexMask pi = VertexMask{1} << i, pj = VertexMask{1} << j;
            Rational share;
            if (((pi & inner) && (pj & mid)) || ((pj & inner) && (pi & mid))) share = im;
            else if (((pi & mid) && (pj & outer)) || ((pj & mid) && (pi & outer))) share = mo;
            else if (((pi & inner) && (pj & outer)) || ((pj & inner) && (pi & outer))) share = io;
            else continue;
            w[edge_index(i, j, n)] = share;
        }
    return Certificate{Instance(n, std::move(w)), x, y, Sense::Min};
}

/// Weight vector from the max-cut constructions. Crossing cuts: the two
/// diagonal quadrant edge groups carry total weight 1 each, the rest 0, and
/// both cuts collect the whole graph weight 2. One-element symmetric
/// difference: the inner-outer group carries total 1, the rest 0, and both
/// cuts collect 1.
inline Certificate max_certificate(const Cut& x, const Cut& y) {
    AdjacencyVerdict verdict = adjacent(x, y, Sense::Max);
    if (!verdict.adjacent)
        throw std::invalid_argument("max_certificate: neither crossing nor one-element symmetric difference");
    int n = x.n();
    std::vector<Rational> w(edge_count(n), Rational(0));

    auto spread = [&](VertexMask s, VertexMask t, const Rational& total) {
        Rational share = detail::uniform_share(total, s, t);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                VertexMask pi = VertexMask{1} << i, pj = VertexMask{1} << j;
                if (((pi & s) && (pj & t)) || ((pj & s) && (pi & t)))
                    w[edge_index(i, j, n)] = share;
            }
    };

    if (verdict.reason == AdjacencyReason::Crossing) {
        VertexMask a = x.mask(), b = y.mask(), all = full_mask(n);
        spread(a & b, all & ~(a | b), 1);
        spread(a & ~b, b & ~a, 1);
    } else {
        auto labeling = detail::nested_labeling(x, y, true);
        if (!labeling) throw std::logic_error("max_certificate: no one-element nested labeling");
        auto [inner, outer_bound] = *labeling;
        spread(inner, full_mask(n) & ~outer_bound, 1);
    }
    return Certificate{Instance(n, std::move(w)), x, y, Sense::Max};
}

/// Exhaustive strict-inequality check over all canonical cuts: the pair must
/// tie and every other cut must be strictly worse in the certificate's
/// sense. On failure the offending cut is reported through `violator`.
inline bool verify_certificate(const Certificate& cert, Cut* violator = nullptr) {
    const Instance& inst = cert.weights;
    Rational vx = cut_value(inst, cert.x);
    Rational vy = cut_value(inst, cert.y);
    if (vx != vy) {
        if (violator) *violator = cert.y;
        return false;
    }
    for (const Cut& z : enumerate_cuts(inst.n())) {
        if (z == cert.x || z == cert.y) continue;
        Rational vz = cut_value(inst, z);
        bool strictly_worse = cert.sense == Sense::Min ? vz > vx : vz < vx;
        if (!strictly_worse) {
            if (violator) *violator = z;
            return false;
        }
    }
    return true;
}

/// Instance text plus a two-line trailer naming the pair and the sense. The
/// trailer lines are comments, so the output still parses as an instance.
inline std::string serialize_certificate(const Certificate& cert) {
    std::ostringstream out;
    out << serialize_instance(cert.weights);
    out << "# cuts x=" << format_vertex_list(cert.x.mask()) << " y=" << format_vertex_list(cert.y.mask()) << "\n";
    out << "# sense " << sense_name(cert.sense) << "\n";
    return out.str();
}

} // namespace cutcones

#endif // CUTCONES_ADJACENCY_HPP
