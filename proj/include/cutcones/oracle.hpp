#ifndef CUTCONES_ORACLE_HPP
#define CUTCONES_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "cutcones/adjacency.hpp"
#include "cutcones/core.hpp"
#include "cutcones/lp.hpp"

namespace cutcones {

/// Margin LP for cone adjacency in the positive orthant: variables are a
/// weight vector c on the simplex (c >= 0, sum 1) and a free margin, the
/// pair is forced to tie, and every other cut must beat the pair's value by
/// at least the margin in the given sense. The pair of cones shares a facet
/// exactly when the maximal margin is positive. Independent of the
/// combinatorial criteria.
inline LinearProgram adjacency_lp(const Cut& x, const Cut& y, Sense sense) {
    require_same_n(x, y, "adjacency_lp");
    if (x == y) throw std::invalid_argument("adjacency_lp: cuts must be distinct");
    int n = x.n();
    int d = edge_count(n);
    LinearProgram lp(d + 1);
    const int eps = d;
    lp.signs[eps] = VarSign::Free;
    lp.objective[eps] = 1;

    CutVector vx = cut_vector(x), vy = cut_vector(y);

    std::vector<Rational> row(d + 1, Rational(0));
    for (int e = 0; e < d; ++e) row[e] = 1;
    lp.add_eq(row, Rational(1));

    for (int e = 0; e < d; ++e) row[e] = Rational(vx.test(e) ? 1 : 0) - Rational(vy.test(e) ? 1 : 0);
    lp.add_eq(row, Rational(0));

    for (const Cut& z : enumerate_cuts(n)) {
        if (z == x || z == y) continue;
        CutVector vz = cut_vector(z);
        for (int e = 0; e < d; ++e) {
            int diff = (vz.test(e) ? 1 : 0) - (vx.test(e) ? 1 : 0);
            row[e] = sense == Sense::Min ? diff : -diff;
        }
        row[eps] = -1;
        lp.add_ge(row, Rational(0));
        row[eps] = 0;
    }
    return lp;
}

/// Exact LP answer to cone adjacency; ground truth for the combinatorial
/// criteria.
inline LpResult oracle_margin(const Cut& x, const Cut& y, Sense sense) {
    LpResult res = solve_lp(adjacency_lp(x, y, sense));
    if (res.status != LpStatus::Optimal)
        throw std::logic_error("adjacency LP must have a finite optimum");
    return res;
}

inline bool oracle_adjacent(const Cut& x, const Cut& y, Sense sense) {
    return oracle_margin(x, y, sense).objective > 0;
}

/// Packages the LP's weight vector as a Certificate. Only meaningful when
/// the optimal margin is positive.
inline Certificate oracle_certificate(const Cut& x, const Cut& y, Sense sense) {
    LpResult res = oracle_margin(x, y, sense);
    if (res.objective <= 0)
        throw std::invalid_argument("oracle_certificate: cones are not adjacent");
    std::vector<Rational> w(res.primal.begin(), res.primal.begin() + edge_count(x.n()));
    return Certificate{Instance(x.n(), std::move(w)), x, y, sense};
}

/// Representative of a subset modulo complementation; unlike canonical cuts
/// the empty set is allowed (it is a CUT(n) polytope vertex).
inline VertexMask skeleton_rep(VertexMask s, int n) {
    if (s & ~full_mask(n)) throw std::invalid_argument("skeleton_rep: vertex out of range");
    return (s & 1u) ? (s ^ full_mask(n)) : s;
}

inline std::vector<VertexMask> skeleton_vertices(int n) {
    std::vector<VertexMask> reps;
    reps.reserve(std::size_t{1} << (n - 1));
    for (VertexMask s = 0; s < (VertexMask{1} << (n - 1)); ++s) reps.push_back(s << 1);
    return reps;
}

/// Same margin LP but over free-sign weights in the unit box, with all
/// 2^{n-1} cut vectors of CUT(n) (empty cut included) as competitors.
inline LinearProgram skeleton_lp(VertexMask sx, VertexMask sy, int n) {
    sx = skeleton_rep(sx, n);
    sy = skeleton_rep(sy, n);
    if (sx == sy) throw std::invalid_argument("skeleton_lp: identical cut vectors");
    int d = edge_count(n);
    LinearProgram lp(d + 1);
    const int eps = d;
    lp.objective[eps] = 1;
    lp.signs[eps] = VarSign::Free;
    for (int e = 0; e < d; ++e) lp.signs[e] = VarSign::Free;

    CutVector vx(n, sx), vy(n, sy);
    std::vector<Rational> row(d + 1, Rational(0));

    for (int e = 0; e < d; ++e) row[e] = Rational(vx.test(e) ? 1 : 0) - Rational(vy.test(e) ? 1 : 0);
    lp.add_eq(row, Rational(0));
    for (int e = 0; e < d; ++e) row[e] = 0;

    for (int e = 0; e < d; ++e) {
        row[e] = 1;
        lp.add_ge(row, Rational(-1));  // c_e >= -1
        row[e] = -1;
        lp.add_ge(row, Rational(-1));  // c_e <= 1
        row[e] = 0;
    }

    for (VertexMask sz : skeleton_vertices(n)) {
        if (sz == sx || sz == sy) continue;
        CutVector vz(n, sz);
        for (int e = 0; e < d; ++e)
            row[e] = Rational(vx.test(e) ? 1 : 0) - Rational(vz.test(e) ? 1 : 0);
        row[eps] = -1;
        lp.add_ge(row, Rational(0));
        row[eps] = 0;
    }
    return lp;
}

/// 1-skeleton adjacency of CUT(n) by exact LP; expected true for every
/// distinct pair.
inline bool skeleton_adjacent(VertexMask sx, VertexMask sy, int n) {
    if (n == 2) return true;  // two vertices, no competitors
    LpResult res = solve_lp(skeleton_lp(sx, sy, n));
    if (res.status != LpStatus::Optimal)
        throw std::logic_error("skeleton LP must have a finite optimum");
    return res.objective > 0;
}

/// All canonical cuts attaining the optimum of the instance in the given
/// sense; the weight vector lies in exactly these cones.
inline std::vector<Cut> cone_membership(const Instance& inst, Sense sense) {
    std::vector<Cut> cuts = enumerate_cuts(inst.n());
    std::vector<Cut> best;
    Rational best_value;
    for (const Cut& z : cuts) {
        Rational v = cut_value(inst, z);
        if (best.empty()) {
            best_value = v;
            best.push_back(z);
            continue;
        }
        bool better = sense == Sense::Min ? v < best_value : v > best_value;
        if (better) {
            best_value = v;
            best.clear();
            best.push_back(z);
        } else if (v == best_value) {
            best.push_back(z);
        }
    }
    return best;
}

} // namespace cutcones

#endif // CUTCONES_ORACLE_HPP
