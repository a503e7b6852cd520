#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmu {

using ElemId = int;

// Planar coordinate. Steps in +a walk along a column, steps in +b walk
// along a row; (a,b) <= (a',b') componentwise in the plane.
struct Coord {
    long long a = 0;
    long long b = 0;
    friend bool operator==(const Coord& l, const Coord& r) { return l.a == r.a && l.b == r.b; }
    friend bool operator<(const Coord& l, const Coord& r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    }
};

inline bool coord_leq(Coord x, Coord y) { return x.a <= y.a && x.b <= y.b; }

// Quotient of the plane by the translation (-k, n-k), with 0 < k < n.
struct CylinderSpec {
    long long k = 1;
    long long n = 2;
};

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// Representative with a in [0, k); the quotient direction changes a by
// multiples of k, so this picks one point per equivalence class.
inline Coord canonical(const CylinderSpec& s, Coord p) {
    long long t = floor_div(p.a, s.k);
    return {p.a - t * s.k, p.b + t * (s.n - s.k)};
}

using Chain = std::vector<ElemId>;  // chain-minimum first

enum class Backing { Grid, GridConvex, CylinderConvex, Explicit };

struct Violation {
    enum class Kind {
        NotPartialOrder,
        RowsNotDisjoint,
        ColumnsNotDisjoint,
        RowsDontCover,
        ColumnsDontCover,
        ChainNotSaturated,
        CoverNotInChain,
        NotTransverse,
        NotConvex,
    };
    Kind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(Violation::Kind k) const {
        for (const auto& v : violations)
            if (v.kind == k) return true;
        return false;
    }
    std::string summary() const {
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += v.detail;
        }
        return s;
    }
};

// Finite poset with a gridwork: two sets of disjoint saturated chains
// (rows and columns) covering the elements, with every covering relation
// inside some chain. Immutable after construction; queries are pure.
struct Poset {
    Backing backing = Backing::Explicit;
    int grid_r = 0, grid_c = 0;          // Grid backing
    std::optional<CylinderSpec> cylinder;  // CylinderConvex backing
    std::vector<std::string> ids;
    std::vector<std::optional<Coord>> coords;  // canonical, when coordinate-backed
    std::vector<Chain> rows;
    std::vector<Chain> columns;
    std::vector<int> row_of;  // index into rows, per element
    std::vector<int> col_of;
    bool transverse = false;
    std::vector<uint8_t> leq_;  // n*n, row-major, reflexive

    int size() const { return static_cast<int>(ids.size()); }
    bool leq(ElemId x, ElemId y) const { return leq_[static_cast<size_t>(x) * ids.size() + y] != 0; }
    bool less(ElemId x, ElemId y) const { return x != y && leq(x, y); }
    bool comparable(ElemId x, ElemId y) const { return leq(x, y) || leq(y, x); }

    ElemId index_of(const std::string& id) const {
        auto it = id_index_.find(id);
        if (it == id_index_.end()) throw std::invalid_argument("unknown element id: " + id);
        return it->second;
    }
    bool has_id(const std::string& id) const { return id_index_.count(id) != 0; }

    bool is_cover(ElemId x, ElemId y) const {
        if (!less(x, y)) return false;
        for (ElemId z = 0; z < size(); ++z)
            if (z != x && z != y && less(x, z) && less(z, y)) return false;
        return true;
    }

    std::vector<std::pair<ElemId, ElemId>> cover_pairs() const {
        std::vector<std::pair<ElemId, ElemId>> out;
        for (ElemId x = 0; x < size(); ++x)
            for (ElemId y = 0; y < size(); ++y)
                if (is_cover(x, y)) out.emplace_back(x, y);
        return out;
    }

    // Element indices ordered by id string; fixes pair-scan order.
    std::vector<ElemId> ids_sorted() const {
        std::vector<ElemId> order(ids.size());
        for (size_t i = 0; i < ids.size(); ++i) order[i] = static_cast<ElemId>(i);
        std::sort(order.begin(), order.end(),
                  [&](ElemId l, ElemId r) { return ids[l] < ids[r]; });
        return order;
    }

    void finalize_index() {
        id_index_.clear();
        for (size_t i = 0; i < ids.size(); ++i) {
            if (!id_index_.emplace(ids[i], static_cast<ElemId>(i)).second)
                throw std::invalid_argument("duplicate element id: " + ids[i]);
        }
    }

private:
    std::map<std::string, ElemId> id_index_;
};

inline std::vector<ElemId> chain_intersection(const Chain& a, const Chain& b) {
    std::vector<ElemId> out;
    for (ElemId x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
    return out;
}

inline std::string coord_id(Coord c) {
    return std::to_string(c.a) + "," + std::to_string(c.b);
}

namespace detail {

inline void assign_chain_membership(Poset& p) {
    p.row_of.assign(p.size(), -1);
    p.col_of.assign(p.size(), -1);
    for (size_t r = 0; r < p.rows.size(); ++r)
        for (ElemId e : p.rows[r]) {
            if (p.row_of[e] != -1) throw std::invalid_argument("rows overlap at " + p.ids[e]);
            p.row_of[e] = static_cast<int>(r);
        }
    for (size_t c = 0; c < p.columns.size(); ++c)
        for (ElemId e : p.columns[c]) {
            if (p.col_of[e] != -1) throw std::invalid_argument("columns overlap at " + p.ids[e]);
            p.col_of[e] = static_cast<int>(c);
        }
}

inline bool compute_transverse(const Poset& p) {
    for (const auto& row : p.rows)
        for (const auto& col : p.columns)
            if (chain_intersection(row, col).size() > 1) return false;
    return true;
}

// Maximal runs through `members` following `next`, starting wherever
// `prev` leaves the set. Runs come out sorted by their start coordinate.
inline std::vector<std::vector<Coord>> maximal_runs(
    const std::set<Coord>& members,
    const std::function<Coord(Coord)>& next,
    const std::function<Coord(Coord)>& prev) {
    std::vector<std::vector<Coord>> runs;
    for (Coord start : members) {
        if (members.count(prev(start))) continue;
        std::vector<Coord> run{start};
        Coord cur = start;
        while (true) {
            Coord nxt = next(cur);
            if (!members.count(nxt)) break;
            run.push_back(nxt);
            cur = nxt;
            if (run.size() > members.size())
                throw std::logic_error("cyclic run in gridwork reconstruction");
        }
        runs.push_back(std::move(run));
    }
    return runs;
}

}  // namespace detail

inline ValidationReport validate(const Poset& p);

namespace detail {

inline void require_valid(const Poset& p, bool allow_nontransverse) {
    ValidationReport rep = validate(p);
    for (const auto& v : rep.violations) {
        if (v.kind == Violation::Kind::NotTransverse && allow_nontransverse) continue;
        throw std::invalid_argument(v.detail);
    }
}

}  // namespace detail

// Product of two chains: elements (i,j) with 1 <= i <= r, 1 <= j <= c,
// ordered componentwise. Matrix convention: entry at display row i
// (counted from the top) and column j labels element (i,j), so the
// top-left cell is the poset minimum.
inline Poset build_grid(int r, int c) {
    if (r < 1 || c < 1) throw std::invalid_argument("grid dimensions must be positive");
    Poset p;
    p.backing = Backing::Grid;
    p.grid_r = r;
    p.grid_c = c;
    int n = r * c;
    p.ids.reserve(n);
    p.coords.reserve(n);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= c; ++j) {
            p.ids.push_back(coord_id({i, j}));
            p.coords.emplace_back(Coord{i, j});
        }
    auto at = [c](int i, int j) { return (i - 1) * c + (j - 1); };
    p.leq_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= c; ++j)
            for (int i2 = i; i2 <= r; ++i2)
                for (int j2 = j; j2 <= c; ++j2)
                    p.leq_[static_cast<size_t>(at(i, j)) * n + at(i2, j2)] = 1;
    for (int i = 1; i <= r; ++i) {
        Chain row;
        for (int j = 1; j <= c; ++j) row.push_back(at(i, j));
        p.rows.push_back(std::move(row));
    }
    for (int j = 1; j <= c; ++j) {
        Chain col;
        for (int i = 1; i <= r; ++i) col.push_back(at(i, j));
        p.columns.push_back(std::move(col));
    }
    detail::assign_chain_membership(p);
    p.transverse = true;
    p.finalize_index();
    return p;
}

// Convex subposet of the plane, ordered componentwise. Rows are maximal
// +b runs of the member set, columns maximal +a runs.
inline Poset build_grid_convex(const std::vector<Coord>& member_list) {
    if (member_list.empty()) throw std::invalid_argument("member set is empty");
    std::set<Coord> members(member_list.begin(), member_list.end());
    Poset p;
    p.backing = Backing::GridConvex;
    std::map<Coord, ElemId> index;
    for (Coord m : members) {
        index[m] = static_cast<ElemId>(p.ids.size());
        p.ids.push_back(coord_id(m));
        p.coords.emplace_back(m);
    }
    int n = p.size();
    p.leq_.assign(static_cast<size_t>(n) * n, 0);
    for (const auto& [cx, x] : index)
        for (const auto& [cy, y] : index)
            if (coord_leq(cx, cy)) p.leq_[static_cast<size_t>(x) * n + y] = 1;
    auto runs_to_chains = [&](const std::vector<std::vector<Coord>>& runs) {
        std::vector<Chain> chains;
        for (const auto& run : runs) {
            Chain ch;
            for (Coord c : run) ch.push_back(index.at(c));
            chains.push_back(std::move(ch));
        }
        return chains;
    };
    p.rows = runs_to_chains(detail::maximal_runs(
        members, [](Coord c) { return Coord{c.a, c.b + 1}; },
        [](Coord c) { return Coord{c.a, c.b - 1}; }));
    p.columns = runs_to_chains(detail::maximal_runs(
        members, [](Coord c) { return Coord{c.a + 1, c.b}; },
        [](Coord c) { return Coord{c.a - 1, c.b}; }));
    detail::assign_chain_membership(p);
    p.transverse = detail::compute_transverse(p);
    p.finalize_index();
    detail::require_valid(p, /*allow_nontransverse=*/false);
    return p;
}

namespace detail {

struct CylinderGeometry {
    CylinderSpec spec;
    long long shift_bound;  // search window for the quotient shift

    bool leq(Coord x, Coord y) const {
        for (long long t = -shift_bound; t <= shift_bound; ++t)
            if (x.a <= y.a - t * spec.k && x.b <= y.b + t * (spec.n - spec.k)) return true;
        return false;
    }
};

inline CylinderGeometry cylinder_geometry(const CylinderSpec& s, const std::set<Coord>& members) {
    long long min_a = members.begin()->a, max_a = min_a;
    long long min_b = members.begin()->b, max_b = min_b;
    for (Coord m : members) {
        min_a = std::min(min_a, m.a);
        max_a = std::max(max_a, m.a);
        min_b = std::min(min_b, m.b);
        max_b = std::max(max_b, m.b);
    }
    long long spread = std::max(max_a - min_a, max_b - min_b);
    long long bound = 1 + spread / std::min(s.k, s.n - s.k);
    return {s, bound};
}

}  // namespace detail

// Convex subposet of the cylinder poset: the plane modulo (-k, n-k),
// ordered via componentwise comparison of shifted representatives.
// Rows are maximal +b runs of canonical members; columns are maximal +a
// runs and may continue across the identification. The derived gridwork
// must come out transverse.
inline Poset build_cylinder_convex(const CylinderSpec& spec, const std::vector<Coord>& member_list) {
    if (spec.k <= 0 || spec.n <= spec.k)
        throw std::invalid_argument("cylinder spec requires 0 < k < n");
    if (member_list.empty()) throw std::invalid_argument("member set is empty");
    std::set<Coord> members;
    for (Coord m : member_list) members.insert(canonical(spec, m));

    detail::CylinderGeometry geom = detail::cylinder_geometry(spec, members);

    Poset p;
    p.backing = Backing::CylinderConvex;
    p.cylinder = spec;
    std::map<Coord, ElemId> index;
    for (Coord m : members) {
        index[m] = static_cast<ElemId>(p.ids.size());
        p.ids.push_back(coord_id(m));
        p.coords.emplace_back(m);
    }
    int n = p.size();
    p.leq_.assign(static_cast<size_t>(n) * n, 0);
    for (const auto& [cx, x] : index)
        for (const auto& [cy, y] : index)
            if (geom.leq(cx, cy)) p.leq_[static_cast<size_t>(x) * n + y] = 1;

    auto runs_to_chains = [&](const std::vector<std::vector<Coord>>& runs) {
        std::vector<Chain> chains;
        for (const auto& run : runs) {
            Chain ch;
            for (Coord c : run) ch.push_back(index.at(c));
            chains.push_back(std::move(ch));
        }
        return chains;
    };
    p.rows = runs_to_chains(detail::maximal_runs(
        members, [](Coord c) { return Coord{c.a, c.b + 1}; },
        [](Coord c) { return Coord{c.a, c.b - 1}; }));
    p.columns = runs_to_chains(detail::maximal_runs(
        members, [&](Coord c) { return canonical(spec, {c.a + 1, c.b}); },
        [&](Coord c) { return canonical(spec, {c.a - 1, c.b}); }));
    detail::assign_chain_membership(p);
    p.transverse = detail::compute_transverse(p);
    p.finalize_index();
    detail::require_valid(p, /*allow_nontransverse=*/false);
    return p;
}

// Poset from explicit covering relations plus a hand-given gridwork.
// Non-transverse gridworks are accepted; everything else must validate.
inline Poset build_explicit(const std::vector<std::string>& ids,
                            const std::vector<std::pair<std::string, std::string>>& covers,
                            const std::vector<std::vector<std::string>>& rows,
                            const std::vector<std::vector<std::string>>& columns) {
    if (ids.empty()) throw std::invalid_argument("element list is empty");
    Poset p;
    p.backing = Backing::Explicit;
    p.ids = ids;
    p.coords.assign(ids.size(), std::nullopt);
    p.finalize_index();
    int n = p.size();

    std::vector<std::vector<ElemId>> succ(n);
    for (const auto& [u, v] : covers) succ[p.index_of(u)].push_back(p.index_of(v));

    // transitive closure by DFS from each element; cycle = reachable self
    p.leq_.assign(static_cast<size_t>(n) * n, 0);
    for (ElemId s = 0; s < n; ++s) {
        std::vector<ElemId> stack{s};
        std::vector<uint8_t> seen(n, 0);
        while (!stack.empty()) {
            ElemId u = stack.back();
            stack.pop_back();
            for (ElemId v : succ[u]) {
                if (v == s) throw std::invalid_argument("covers contain a cycle through " + p.ids[s]);
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        for (ElemId v = 0; v < n; ++v)
            if (seen[v] || v == s) p.leq_[static_cast<size_t>(s) * n + v] = 1;
    }

    auto to_chain = [&](const std::vector<std::string>& seq) {
        Chain ch;
        for (const auto& id : seq) ch.push_back(p.index_of(id));
        return ch;
    };
    for (const auto& seq : rows) p.rows.push_back(to_chain(seq));
    for (const auto& seq : columns) p.columns.push_back(to_chain(seq));
    detail::assign_chain_membership(p);
    p.transverse = detail::compute_transverse(p);
    detail::require_valid(p, /*allow_nontransverse=*/true);
    return p;
}

// Diagnostic re-check of every instance invariant.
inline ValidationReport validate(const Poset& p) {
    ValidationReport rep;
    int n = p.size();
    auto add = [&rep](Violation::Kind k, std::string d) {
        rep.violations.push_back({k, std::move(d)});
    };

    // partial order axioms (reflexivity is structural)
    bool order_ok = true;
    for (ElemId x = 0; x < n && order_ok; ++x) {
        if (!p.leq(x, x)) {
            add(Violation::Kind::NotPartialOrder, "order not reflexive at " + p.ids[x]);
            order_ok = false;
        }
        for (ElemId y = 0; y < n && order_ok; ++y)
            if (x != y && p.leq(x, y) && p.leq(y, x)) {
                add(Violation::Kind::NotPartialOrder,
                    "order not antisymmetric on " + p.ids[x] + "," + p.ids[y]);
                order_ok = false;
            }
    }
    for (ElemId x = 0; x < n && order_ok; ++x)
        for (ElemId y = 0; y < n && order_ok; ++y)
            if (p.leq(x, y))
                for (ElemId z = 0; z < n; ++z)
                    if (p.leq(y, z) && !p.leq(x, z)) {
                        add(Violation::Kind::NotPartialOrder,
                            "order not transitive via " + p.ids[y]);
                        order_ok = false;
                        break;
                    }

    // disjointness and coverage
    auto check_family = [&](const std::vector<Chain>& family, Violation::Kind disjoint,
                            Violation::Kind cover, const char* name) {
        std::vector<int> count(n, 0);
        for (const auto& ch : family)
            for (ElemId e : ch) ++count[e];
        for (ElemId e = 0; e < n; ++e) {
            if (count[e] == 0)
                add(cover, std::string(name) + " do not cover " + p.ids[e]);
            else if (count[e] > 1)
                add(disjoint, std::string(name) + " overlap at " + p.ids[e]);
        }
    };
    check_family(p.rows, Violation::Kind::RowsNotDisjoint, Violation::Kind::RowsDontCover, "rows");
    check_family(p.columns, Violation::Kind::ColumnsNotDisjoint, Violation::Kind::ColumnsDontCover,
                 "columns");

    // saturation: consecutive chain entries must be covering relations
    auto check_saturated = [&](const std::vector<Chain>& family, const char* name) {
        for (const auto& ch : family)
            for (size_t i = 0; i + 1 < ch.size(); ++i)
                if (!p.is_cover(ch[i], ch[i + 1]))
                    add(Violation::Kind::ChainNotSaturated,
                        std::string(name) + " chain not saturated at " + p.ids[ch[i]] + " -> " +
                            p.ids[ch[i + 1]]);
    };
    check_saturated(p.rows, "row");
    check_saturated(p.columns, "column");

    // every covering relation lies inside some chain
    std::set<std::pair<ElemId, ElemId>> chain_edges;
    for (const auto& ch : p.rows)
        for (size_t i = 0; i + 1 < ch.size(); ++i) chain_edges.emplace(ch[i], ch[i + 1]);
    for (const auto& ch : p.columns)
        for (size_t i = 0; i + 1 < ch.size(); ++i) chain_edges.emplace(ch[i], ch[i + 1]);
    if (order_ok)
        for (const auto& [u, v] : p.cover_pairs())
            if (!chain_edges.count({u, v}))
                add(Violation::Kind::CoverNotInChain,
                    "covering relation " + p.ids[u] + " -> " + p.ids[v] + " is in no row or column");

    if (!detail::compute_transverse(p))
        add(Violation::Kind::NotTransverse, "a row and a column intersect more than once");

    // convexity for coordinate-backed members
    if (p.backing == Backing::GridConvex || p.backing == Backing::CylinderConvex) {
        std::set<Coord> members;
        for (const auto& c : p.coords)
            if (c) members.insert(*c);
        std::set<Coord> gaps;
        if (p.backing == Backing::GridConvex) {
            for (Coord x : members)
                for (Coord y : members)
                    if (coord_leq(x, y))
                        for (long long a = x.a; a <= y.a; ++a)
                            for (long long b = x.b; b <= y.b; ++b)
                                if (!members.count({a, b})) gaps.insert({a, b});
        } else {
            const CylinderSpec spec = *p.cylinder;
            detail::CylinderGeometry geom = detail::cylinder_geometry(spec, members);
            for (Coord x : members)
                for (Coord y : members) {
                    if (!geom.leq(x, y)) continue;
                    for (long long t = -geom.shift_bound; t <= geom.shift_bound; ++t) {
                        Coord yt{y.a - t * spec.k, y.b + t * (spec.n - spec.k)};
                        if (!coord_leq(x, yt)) continue;
                        for (long long a = x.a; a <= yt.a; ++a)
                            for (long long b = x.b; b <= yt.b; ++b) {
                                Coord z = canonical(spec, {a, b});
                                if (!members.count(z)) gaps.insert(z);
                            }
                    }
                }
        }
        for (Coord g : gaps)
            add(Violation::Kind::NotConvex, "member set not convex: interval gap at " + coord_id(g));
    }
    return rep;
}

}  // namespace nmu
