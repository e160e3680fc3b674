#ifndef CUTCONES_WALKER_HPP
#define CUTCONES_WALKER_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutcones/adjacency.hpp"
#include "cutcones/core.hpp"
#include "cutcones/rational.hpp"

namespace cutcones {

/// Polynomial sub-neighborhood used by the walker. Both senses get every
/// cut at one-vertex symmetric difference (toggling any vertex, the
/// complement form included); the min sense additionally gets every
/// single-vertex cut, which is nested or disjoint with everything. All of
/// these are graph edges of the corresponding cone partition, but they are
/// exponentially fewer than the full neighborhoods. Sorted by canonical
/// mask, deduplicated, the cut itself removed.
inline std::vector<Cut> poly_neighbors(const Cut& x, Sense sense) {
    int n = x.n();
    VertexMask full = full_mask(n);
    std::vector<Cut> out;
    out.reserve(2 * n);
    for (int v = 0; v < n; ++v) {
        VertexMask m = x.mask() ^ (VertexMask{1} << v);
        if (m == 0 || m == full) continue;
        out.push_back(canonicalize(m, n));
    }
    if (sense == Sense::Min)
        for (int v = 0; v < n; ++v) out.push_back(canonicalize(VertexMask{1} << v, n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    out.erase(std::remove(out.begin(), out.end(), x), out.end());
    return out;
}

struct WalkStep {
    Cut cut;
    Rational value;
};

/// Record of one local-search run: the start, every accepted move with its
/// value, and the sense. Consecutive cuts are cone-partition-graph
/// neighbors and values are strictly improving.
struct WalkTrace {
    Cut start;
    Rational start_value;
    std::vector<WalkStep> steps;
    Sense sense;

    const Cut& terminal() const { return steps.empty() ? start : steps.back().cut; }
    const Rational& terminal_value() const {
        return steps.empty() ? start_value : steps.back().value;
    }
};

/// Best-improvement local search over poly_neighbors: move to the strictly
/// best improving neighbor, smallest canonical mask on ties, until none
/// improves. Deterministic; terminates because the value strictly improves
/// over a finite set.
inline WalkTrace local_search(const Instance& inst, const Cut& start, Sense sense) {
    if (inst.n() != start.n())
        throw std::invalid_argument("local_search: instance and cut sizes differ");
    WalkTrace trace{start, cut_value(inst, start), {}, sense};
    Cut current = start;
    Rational value = trace.start_value;
    for (;;) {
        const Cut* best = nullptr;
        Rational best_value;
        std::vector<Cut> candidates = poly_neighbors(current, sense);
        for (const Cut& z : candidates) {
            Rational v = cut_value(inst, z);
            bool improves = sense == Sense::Min ? v < value : v > value;
            if (!improves) continue;
            bool better = !best || (sense == Sense::Min ? v < best_value : v > best_value);
            if (better) {
                best = &z;
                best_value = v;
            }
        }
        if (!best) return trace;
        current = *best;
        value = best_value;
        trace.steps.push_back(WalkStep{current, value});
    }
}

/// One JSON object per line: the start at step 0, then each accepted move.
inline std::string trace_jsonl(const WalkTrace& trace) {
    std::ostringstream out;
    auto line = [&](int step, const Cut& c, const Rational& v) {
        nlohmann::json obj;
        obj["step"] = step;
        obj["cutMask"] = c.mask();
        obj["vertices"] = format_vertex_list(c.mask());
        obj["value"] = format_rational(v);
        out << obj.dump() << "\n";
    };
    line(0, trace.start, trace.start_value);
    for (std::size_t i = 0; i < trace.steps.size(); ++i)
        line(static_cast<int>(i) + 1, trace.steps[i].cut, trace.steps[i].value);
    return out.str();
}

} // namespace cutcones

#endif // CUTCONES_WALKER_HPP
