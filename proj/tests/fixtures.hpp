#pragma once

#include "nmu/poset.hpp"
#include "nmu/sorting.hpp"

namespace fixtures {

using Matrix = std::vector<std::vector<nmu::Label>>;

// 3x4 working example: a scrambled matrix and its four sorted companions.
inline Matrix m_3x4() {
    return {{4, 9, 7, 8}, {12, 5, 1, 10}, {2, 6, 11, 3}};
}
inline Matrix m_3x4_colsorted() {
    return {{2, 5, 1, 3}, {4, 6, 7, 8}, {12, 9, 11, 10}};
}
inline Matrix m_3x4_rowsorted() {
    return {{4, 7, 8, 9}, {1, 5, 10, 12}, {2, 3, 6, 11}};
}
inline Matrix m_3x4_rc() {
    return {{1, 2, 3, 5}, {4, 6, 7, 8}, {9, 10, 11, 12}};
}
inline Matrix m_3x4_cr() {
    return {{1, 3, 6, 9}, {2, 5, 8, 11}, {4, 7, 10, 12}};
}

inline nmu::Labeling from_matrix(const nmu::Poset& grid, const Matrix& m) {
    nmu::Labeling l(grid.size());
    for (int i = 0; i < grid.grid_r; ++i)
        for (int j = 0; j < grid.grid_c; ++j) l[i * grid.grid_c + j] = m[i][j];
    return l;
}

// Five elements whose middle edge lies in both a row and a column, so the
// gridwork is not transverse.
inline nmu::Poset nontransverse5() {
    return nmu::build_explicit(
        {"b", "r1", "r2", "t", "l"},
        {{"b", "r1"}, {"r1", "r2"}, {"r2", "t"}, {"b", "l"}, {"l", "t"}},
        {{"b", "r1", "r2"}, {"l", "t"}},
        {{"b", "l"}, {"r1", "r2", "t"}});
}

inline nmu::Labeling nontransverse5_labels(const nmu::Poset& p) {
    nmu::Labeling l(p.size());
    l[p.index_of("b")] = 5;
    l[p.index_of("r1")] = 1;
    l[p.index_of("r2")] = 3;
    l[p.index_of("t")] = 2;
    l[p.index_of("l")] = 4;
    return l;
}

// Diamond given explicitly: two incomparable middles over a bottom, under a top.
inline nmu::Poset diamond() {
    return nmu::build_explicit(
        {"bottom", "left", "right", "top"},
        {{"bottom", "left"}, {"bottom", "right"}, {"left", "top"}, {"right", "top"}},
        {{"bottom", "left"}, {"right", "top"}},
        {{"bottom", "right"}, {"left", "top"}});
}

// Three elements: two minima under a common cover, and the dual.
inline nmu::Poset vee() {
    return nmu::build_explicit({"x", "y", "z"}, {{"x", "z"}, {"y", "z"}},
                               {{"x", "z"}, {"y"}}, {{"y", "z"}, {"x"}});
}
inline nmu::Poset wedge() {
    return nmu::build_explicit({"x", "y", "z"}, {{"z", "x"}, {"z", "y"}},
                               {{"z", "x"}, {"y"}}, {{"z", "y"}, {"x"}});
}

// Three-chain with a bent gridwork: the middle element tops its column
// but starts its row. Satisfies every gridwork axiom and is transverse,
// yet the two sorts can fight.
inline nmu::Poset bent_chain3() {
    return nmu::build_explicit({"y", "z", "v"}, {{"y", "z"}, {"z", "v"}},
                               {{"z", "v"}, {"y"}}, {{"y", "z"}, {"v"}});
}

// Six-element diagonal band winding once around the k=2, n=5 cylinder;
// every column run continues across the identification.
inline nmu::Poset wrapped_band6() {
    return nmu::build_cylinder_convex({2, 5}, {{1, 0}, {1, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}});
}

// Seven-element staircase on the k=2, n=6 cylinder with three
// identification-crossing column runs.
inline nmu::Poset wrapped_staircase7() {
    return nmu::build_cylinder_convex(
        {2, 6}, {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {0, 4}, {0, 5}, {0, 6}});
}

// Eight-element staircase on the k=2, n=7 cylinder; four crossing columns.
inline nmu::Poset wrapped_staircase8() {
    return nmu::build_cylinder_convex(
        {2, 7}, {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {0, 5}, {0, 6}, {0, 7}, {0, 8}});
}

// Small cylinder-convex block that stays inside one fundamental strip.
inline nmu::Poset cylinder_block4() {
    return nmu::build_cylinder_convex({2, 5}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

// Six-element staircase-shaped convex subposet of the plane.
inline nmu::Poset staircase6() {
    return nmu::build_grid_convex({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}});
}

// 6x6 two-valued labeling whose column row-sets form an inclusion chain.
inline Matrix two_valued_6x6() {
    return {{2, 1, 2, 2, 1, 1},
            {2, 1, 1, 2, 1, 1},
            {2, 1, 2, 2, 2, 2},
            {2, 1, 2, 2, 2, 1},
            {2, 2, 2, 2, 2, 2},
            {2, 1, 1, 2, 1, 1}};
}
// A valid hierarchy ordering of its columns, 0-based.
inline std::vector<int> two_valued_6x6_ordering() { return {0, 3, 2, 4, 5, 1}; }

// All labelings by 1..n of a poset, visited as label vectors in element order.
template <class F>
void for_all_bijective(const nmu::Poset& p, F&& f) {
    std::vector<int> perm(p.size());
    for (int i = 0; i < p.size(); ++i) perm[i] = i + 1;
    do {
        nmu::Labeling l(perm.begin(), perm.end());
        f(l);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace fixtures
