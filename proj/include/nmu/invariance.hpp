#pragma once

#include <bit>

#include "nmu/poset.hpp"
#include "nmu/sorting.hpp"

namespace nmu {

// Corner-set of a pair that shares neither row nor column: x, y together
// with the intersection of x's row with y's column (w) and of x's column
// with y's row (z). Empty when x,y share a chain; at most four elements
// in a transverse gridwork.
struct CornerSet {
    ElemId x = -1, y = -1;
    std::optional<ElemId> w;  // row(x) meet column(y)
    std::optional<ElemId> z;  // column(x) meet row(y)
    bool empty = true;

    std::vector<ElemId> members() const {
        if (empty) return {};
        std::vector<ElemId> m{x, y};
        if (w) m.push_back(*w);
        if (z) m.push_back(*z);
        return m;
    }
    int size() const { return empty ? 0 : 2 + (w ? 1 : 0) + (z ? 1 : 0); }
};

inline CornerSet corner_set(const Poset& p, ElemId x, ElemId y) {
    if (!p.transverse)
        throw std::invalid_argument("corner sets are defined for transverse gridworks");
    if (x == y) throw std::invalid_argument("corner set requires two distinct elements");
    CornerSet cs;
    cs.x = x;
    cs.y = y;
    if (p.row_of[x] == p.row_of[y] || p.col_of[x] == p.col_of[y]) return cs;
    cs.empty = false;
    auto single = [](const std::vector<ElemId>& v) {
        return v.empty() ? std::optional<ElemId>() : std::optional<ElemId>(v.front());
    };
    cs.w = single(chain_intersection(p.rows[p.row_of[x]], p.columns[p.col_of[y]]));
    cs.z = single(chain_intersection(p.columns[p.col_of[x]], p.rows[p.row_of[y]]));
    return cs;
}

struct BadnessVerdict {
    CornerSet cs;
    bool bad = false;
    std::string witness;  // label comparison that triggered badness
};

// A corner-set is bad when the defining pair's labels sit strictly on one
// side of every corner label: for four corners, both of x,y above (or
// below) both of w,z; for the degenerate three-element sets, both above a
// corner over them or both below a corner under them. Equal labels never
// make a corner-set bad.
inline BadnessVerdict classify(const Poset& p, const Labeling& l, const CornerSet& cs) {
    require_total(p, l);
    BadnessVerdict v;
    v.cs = cs;
    if (cs.empty || cs.size() <= 2) return v;
    Label lx = l[cs.x], ly = l[cs.y];
    auto name = [&](ElemId e) { return p.ids[e] + "(" + std::to_string(l[e]) + ")"; };
    if (cs.size() == 4) {
        Label lw = l[*cs.w], lz = l[*cs.z];
        if (std::min(lx, ly) > std::max(lw, lz) || std::max(lx, ly) < std::min(lw, lz)) {
            v.bad = true;
            v.witness = "pair " + name(cs.x) + "," + name(cs.y) +
                        (std::min(lx, ly) > std::max(lw, lz) ? " above" : " below") +
                        " corners " + name(*cs.w) + "," + name(*cs.z);
        }
        return v;
    }
    // three elements: the lone corner is comparable to both x and y, and
    // x,y must be incomparable (guaranteed on grid- and cylinder-convex
    // posets; anything else is rejected rather than guessed at)
    if (p.comparable(cs.x, cs.y))
        throw std::invalid_argument("three-element corner-set with comparable defining pair");
    ElemId c = cs.w ? *cs.w : *cs.z;
    if (p.less(cs.x, c) && p.less(cs.y, c)) {
        if (std::min(lx, ly) > l[c]) {
            v.bad = true;
            v.witness = "pair " + name(cs.x) + "," + name(cs.y) + " above corner " + name(c);
        }
    } else if (p.less(c, cs.x) && p.less(c, cs.y)) {
        if (std::max(lx, ly) < l[c]) {
            v.bad = true;
            v.witness = "pair " + name(cs.x) + "," + name(cs.y) + " below corner " + name(c);
        }
    } else {
        throw std::invalid_argument("three-element corner-set whose corner does not bound the pair");
    }
    return v;
}

// First bad corner-set in id-lexicographic pair order, if any.
inline std::optional<BadnessVerdict> find_bad_corner_set(const Poset& p, const Labeling& l) {
    std::vector<ElemId> order = p.ids_sorted();
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j) {
            BadnessVerdict v = classify(p, l, corner_set(p, order[i], order[j]));
            if (v.bad) return v;
        }
    return std::nullopt;
}

inline std::vector<BadnessVerdict> all_bad_corner_sets(const Poset& p, const Labeling& l) {
    std::vector<BadnessVerdict> out;
    std::vector<ElemId> order = p.ids_sorted();
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j) {
            BadnessVerdict v = classify(p, l, corner_set(p, order[i], order[j]));
            if (v.bad) out.push_back(std::move(v));
        }
    return out;
}

// Pattern-avoidance decision: the labeling commutes under the two sorts
// iff no corner-set is bad.
inline bool predict_sort_invariant(const Poset& p, const Labeling& l) {
    return !find_bad_corner_set(p, l).has_value();
}

// The definition itself, used as the oracle for the predictor.
inline bool direct_sort_invariant(const Poset& p, const Labeling& l) {
    return rc(p, l) == cr(p, l);
}

// Two-valued collapse: 1 where the label is at most k, else 2.
inline Labeling threshold(const Labeling& l, Label k) {
    Labeling out(l.size());
    for (size_t i = 0; i < l.size(); ++i) out[i] = l[i] <= k ? 1 : 2;
    return out;
}

using Shape = std::vector<bool>;  // element subset, indexed by ElemId

inline Shape shape_of_ones(const Poset& p, const Labeling& l) {
    require_total(p, l);
    Shape s(l.size());
    for (size_t i = 0; i < l.size(); ++i) s[i] = (l[i] == 1);
    return s;
}

namespace detail {

inline std::vector<uint64_t> column_one_rowsets(const Poset& p, const Labeling& l) {
    require_total(p, l);
    if (p.backing != Backing::Grid)
        throw std::invalid_argument("hierarchy check requires a product of two chains");
    if (p.grid_r > 63) throw std::invalid_argument("grid too tall for the hierarchy check");
    for (Label v : l)
        if (v != 1 && v != 2) throw std::invalid_argument("hierarchy check requires labels in {1,2}");
    std::vector<uint64_t> sets(p.columns.size(), 0);
    for (size_t j = 0; j < p.columns.size(); ++j)
        for (size_t i = 0; i < p.columns[j].size(); ++i)
            if (l[p.columns[j][i]] == 1) sets[j] |= (uint64_t(1) << i);
    return sets;
}

}  // namespace detail

// Columns in weakly increasing order of their number of 1s (stable, so
// equal counts keep grid order). A witness ordering for the hierarchy
// condition when it holds.
inline std::vector<int> hierarchy_ordering(const Poset& p, const Labeling& l) {
    std::vector<uint64_t> sets = detail::column_one_rowsets(p, l);
    std::vector<int> order(sets.size());
    for (size_t j = 0; j < sets.size(); ++j) order[j] = static_cast<int>(j);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(sets[a]) < std::popcount(sets[b]);
    });
    return order;
}

// The two-valued hierarchy condition on a grid: taken in weakly
// increasing 1-count order, the row-sets of the columns must form a chain
// under inclusion. Ties have equal counts, so any tie order works iff the
// tied sets are equal; consecutive checks after a stable count sort
// decide the exists-an-ordering reading.
inline bool hierarchy_holds(const Poset& p, const Labeling& l) {
    std::vector<uint64_t> sets = detail::column_one_rowsets(p, l);
    std::vector<int> order = hierarchy_ordering(p, l);
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        uint64_t a = sets[order[i]], b = sets[order[i + 1]];
        if ((a & b) != a) return false;
    }
    return true;
}

// Badness generalized to possibly non-transverse gridworks: row/column
// intersections may hold several elements, and a witness needs all four
// intersection sets nonempty.
inline bool generalized_bad(const Poset& p, const Labeling& l) {
    require_total(p, l);
    int n = p.size();
    for (ElemId x = 0; x < n; ++x)
        for (ElemId y = x + 1; y < n; ++y) {
            if (p.row_of[x] == p.row_of[y] || p.col_of[x] == p.col_of[y]) continue;
            const Chain& rx = p.rows[p.row_of[x]];
            const Chain& ry = p.rows[p.row_of[y]];
            const Chain& cx = p.columns[p.col_of[x]];
            const Chain& cy = p.columns[p.col_of[y]];
            std::vector<ElemId> xs = chain_intersection(rx, cx);
            std::vector<ElemId> ys = chain_intersection(ry, cy);
            std::vector<ElemId> us = chain_intersection(rx, cy);
            std::vector<ElemId> vs = chain_intersection(ry, cx);
            if (us.empty() || vs.empty()) continue;
            auto minmax = [&](const std::vector<ElemId>& es) {
                Label lo = l[es[0]], hi = l[es[0]];
                for (ElemId e : es) {
                    lo = std::min(lo, l[e]);
                    hi = std::max(hi, l[e]);
                }
                return std::pair<Label, Label>{lo, hi};
            };
            auto [xlo, xhi] = minmax(xs);
            auto [ylo, yhi] = minmax(ys);
            auto [ulo, uhi] = minmax(us);
            auto [vlo, vhi] = minmax(vs);
            if (std::min(xhi, yhi) > std::max(ulo, vlo)) return true;
            if (std::max(xlo, ylo) < std::min(uhi, vhi)) return true;
        }
    return false;
}

// Extend a labeling of a convex subposet of a grid to the whole grid:
// fillers under the subposet get a label below every real one, the rest
// a label above every real one. Sort-invariance and badness carry over
// between the two labelings unchanged.
inline Labeling extend_convex(const Poset& big, const Poset& sub, const Labeling& l) {
    require_total(sub, l);
    if (big.backing != Backing::Grid)
        throw std::invalid_argument("extension target must be a full grid");
    std::map<Coord, ElemId> sub_at;
    for (ElemId e = 0; e < sub.size(); ++e) {
        if (!sub.coords[e]) throw std::invalid_argument("subposet elements need coordinates");
        sub_at[*sub.coords[e]] = e;
    }
    for (const auto& [c, e] : sub_at)
        if (c.a < 1 || c.a > big.grid_r || c.b < 1 || c.b > big.grid_c)
            throw std::invalid_argument("subposet element " + coord_id(c) + " outside the grid");
    // convexity of the subposet inside the grid
    for (const auto& [cx, ex] : sub_at)
        for (const auto& [cy, ey] : sub_at)
            if (coord_leq(cx, cy))
                for (long long a = cx.a; a <= cy.a; ++a)
                    for (long long b = cx.b; b <= cy.b; ++b)
                        if (!sub_at.count({a, b}))
                            throw std::invalid_argument("subposet is not convex in the grid");
    Label above = static_cast<Label>(sub.size()) + 1;
    Labeling out(big.size());
    for (ElemId e = 0; e < big.size(); ++e) {
        Coord c = *big.coords[e];
        auto it = sub_at.find(c);
        if (it != sub_at.end()) {
            out[e] = l[it->second];
            continue;
        }
        bool below = false;
        for (const auto& [cs, es] : sub_at)
            if (coord_leq(c, cs) && !(c == cs)) {
                below = true;
                break;
            }
        out[e] = below ? 0 : above;
    }
    return out;
}

// Plane poset glued from translated copies of a cylinder-convex poset,
// with the correspondence back to the cylinder.
struct Unrolled {
    Poset planar;
    std::vector<ElemId> to_source;  // planar element -> cylinder element
    std::vector<ElemId> center;     // cylinder element -> its copy-0 planar element
};

inline Unrolled unroll(const Poset& cyl, int copies) {
    if (cyl.backing != Backing::CylinderConvex)
        throw std::invalid_argument("unroll requires a cylinder-convex poset");
    if (copies < 1) throw std::invalid_argument("copies must be positive");
    const CylinderSpec spec = *cyl.cylinder;
    long long t0 = -static_cast<long long>((copies - 1) / 2);
    std::vector<Coord> planar_coords;
    for (long long t = t0; t < t0 + copies; ++t)
        for (ElemId e = 0; e < cyl.size(); ++e) {
            Coord c = *cyl.coords[e];
            planar_coords.push_back({c.a - t * spec.k, c.b + t * (spec.n - spec.k)});
        }
    Unrolled u;
    u.planar = build_grid_convex(planar_coords);
    u.to_source.resize(u.planar.size());
    u.center.assign(cyl.size(), -1);
    for (ElemId e = 0; e < u.planar.size(); ++e) {
        Coord c = *u.planar.coords[e];
        ElemId src = cyl.index_of(coord_id(canonical(spec, c)));
        u.to_source[e] = src;
        if (c == *cyl.coords[src]) u.center[src] = e;
    }
    return u;
}

// Label every preimage of an element by that element's label.
inline Labeling replicate_labels(const Unrolled& u, const Labeling& l) {
    Labeling out(u.planar.size());
    for (ElemId e = 0; e < u.planar.size(); ++e) out[e] = l[u.to_source[e]];
    return out;
}

// Column-run steps that jump across the identification when read in
// canonical coordinates.
inline int identification_crossings(const Poset& cyl) {
    if (cyl.backing != Backing::CylinderConvex)
        throw std::invalid_argument("crossings are defined for cylinder-convex posets");
    int crossings = 0;
    for (const auto& col : cyl.columns)
        for (size_t i = 0; i + 1 < col.size(); ++i) {
            Coord a = *cyl.coords[col[i]];
            Coord b = *cyl.coords[col[i + 1]];
            if (!(b == Coord{a.a + 1, a.b})) ++crossings;
        }
    return crossings;
}

inline int default_unroll_copies(const Poset& cyl) {
    return 2 * identification_crossings(cyl) + 3;
}

namespace detail {

inline Labeling sort_via_unroll(const Poset& cyl, const Labeling& l, bool rows_last) {
    require_total(cyl, l);
    int copies = default_unroll_copies(cyl);
    int limit = copies + 2 * cyl.size() + 20;
    std::optional<Labeling> prev;
    for (; copies <= limit; copies += 2) {
        Unrolled u = unroll(cyl, copies);
        Labeling planar = replicate_labels(u, l);
        Labeling sorted = rows_last ? rc(u.planar, planar) : cr(u.planar, planar);
        Labeling center(cyl.size());
        for (ElemId e = 0; e < cyl.size(); ++e) center[e] = sorted[u.center[e]];
        if (prev && *prev == center) return center;
        prev = std::move(center);
    }
    throw std::logic_error("unrolled sort did not stabilize");
}

}  // namespace detail

// Sorted labels computed in the plane and read back off the center copy;
// the window widens until the center stabilizes.
inline Labeling rc_via_unroll(const Poset& cyl, const Labeling& l) {
    return detail::sort_via_unroll(cyl, l, /*rows_last=*/true);
}
inline Labeling cr_via_unroll(const Poset& cyl, const Labeling& l) {
    return detail::sort_via_unroll(cyl, l, /*rows_last=*/false);
}

}  // namespace nmu
