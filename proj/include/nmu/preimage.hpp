#pragma once

#include <functional>

#include "nmu/bigint.hpp"
#include "nmu/enumerate.hpp"
#include "nmu/poset.hpp"
#include "nmu/sorting.hpp"

namespace nmu {

// r-by-c arrangement of the integers 1..rc with every row increasing
// left to right and every column increasing top to bottom.
struct SortedMatrix {
    int r = 0, c = 0;
    std::vector<int> entries;  // row-major

    SortedMatrix(int rows, int cols, std::vector<int> vals)
        : r(rows), c(cols), entries(std::move(vals)) {
        if (r < 1 || c < 1) throw std::invalid_argument("matrix dimensions must be positive");
        if (static_cast<int>(entries.size()) != r * c)
            throw std::invalid_argument("matrix entry count does not match dimensions");
        std::vector<int> sorted = entries;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < r * c; ++i)
            if (sorted[i] != i + 1)
                throw std::invalid_argument("matrix entries must be exactly 1..rc");
        for (int i = 0; i < r; ++i)
            for (int j = 0; j + 1 < c; ++j)
                if (at(i, j) > at(i, j + 1))
                    throw std::invalid_argument("matrix rows must be non-decreasing");
        for (int j = 0; j < c; ++j)
            for (int i = 0; i + 1 < r; ++i)
                if (at(i, j) > at(i + 1, j))
                    throw std::invalid_argument("matrix columns must be non-decreasing");
    }

    int at(int i, int j) const { return entries[i * c + j]; }  // 0-based

    SortedMatrix transpose() const {
        std::vector<int> t(entries.size());
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) t[j * r + i] = at(i, j);
        return SortedMatrix(c, r, std::move(t));
    }

    friend bool operator==(const SortedMatrix& a, const SortedMatrix& b) {
        return a.r == b.r && a.c == b.c && a.entries == b.entries;
    }
};

// Per-entry factor of the preimage count: 1 on the top row, otherwise
// the number of smaller entries in the row immediately above that sit in
// the same column or further right.
inline int h_value(const SortedMatrix& A, int entry) {
    if (entry < 1 || entry > A.r * A.c) throw std::invalid_argument("entry not present");
    int pos = static_cast<int>(std::find(A.entries.begin(), A.entries.end(), entry) -
                               A.entries.begin());
    int i = pos / A.c, j = pos % A.c;
    if (i == 0) return 1;
    int count = 0;
    for (int j2 = j; j2 < A.c; ++j2)
        if (A.at(i - 1, j2) < entry) ++count;
    return count;
}

inline BigUint h_product(const SortedMatrix& A) {
    BigUint prod(1);
    for (int entry = 1; entry <= A.r * A.c; ++entry)
        prod = prod * BigUint(static_cast<uint64_t>(h_value(A, entry)));
    return prod;
}

enum class SortOrder { RC, CR };  // RC: columns first, then rows

// Exact number of matrices whose double sort yields A.
inline BigUint count_preimages(const SortedMatrix& A, SortOrder order) {
    unsigned r = static_cast<unsigned>(A.r), c = static_cast<unsigned>(A.c);
    if (order == SortOrder::RC)
        return h_product(A) * BigUint::pow(BigUint::factorial(r), c) * BigUint::factorial(c);
    return h_product(A.transpose()) * BigUint::pow(BigUint::factorial(c), r) *
           BigUint::factorial(r);
}

// Probability that a uniformly random matrix sorted by a fair-coin choice
// of the two compositions produced A via the columns-then-rows order.
inline Rational preferred_probability(const SortedMatrix& A) {
    unsigned r = static_cast<unsigned>(A.r), c = static_cast<unsigned>(A.c);
    BigUint rc_side = h_product(A) * BigUint::pow(BigUint::factorial(r), c - 1);
    BigUint cr_side = h_product(A.transpose()) * BigUint::pow(BigUint::factorial(c), r - 1);
    return Rational::make(rc_side, rc_side + cr_side);
}

// Every sorted r-by-c matrix, produced by placing 1..rc top-down: value m
// may extend any row that is still shorter than the row above it.
inline void enumerate_sorted(int r, int c, const std::function<void(const SortedMatrix&)>& visit) {
    if (r < 1 || c < 1) throw std::invalid_argument("matrix dimensions must be positive");
    std::vector<int> fill(r, 0);
    std::vector<int> cells(static_cast<size_t>(r) * c, 0);
    auto place = [&](auto&& self, int value) -> void {
        if (value > r * c) {
            visit(SortedMatrix(r, c, cells));
            return;
        }
        for (int i = 0; i < r; ++i) {
            if (fill[i] == c) continue;
            if (i > 0 && fill[i - 1] <= fill[i]) continue;
            cells[i * c + fill[i]] = value;
            ++fill[i];
            self(self, value + 1);
            --fill[i];
        }
    };
    place(place, 1);
}

inline std::vector<SortedMatrix> all_sorted(int r, int c) {
    std::vector<SortedMatrix> out;
    enumerate_sorted(r, c, [&](const SortedMatrix& m) { out.push_back(m); });
    return out;
}

// Exhaustive oracle in one pass: run every arrangement of 1..rc through
// the sort engine and tally, per resulting sorted matrix, how many
// arrangements land on it under each composition (RC count, CR count).
// The permutation space splits into per-worker rank blocks; block
// tallies merge by addition, so results do not depend on worker count.
inline std::map<std::vector<int>, std::pair<uint64_t, uint64_t>> brute_force_tally(
    int r, int c, int workers = 1) {
    int n = r * c;
    if (n > 10) throw std::invalid_argument("brute force bounded to rc <= 10");
    Poset grid = build_grid(r, c);
    using Tally = std::map<std::vector<int>, std::pair<uint64_t, uint64_t>>;
    if (workers < 1) workers = 1;
    std::vector<Tally> partial(workers);
    parallel_blocks(factorial_u64(n), workers, [&](int block, uint64_t from, uint64_t to) {
        visit_permutations(n, from, to, [&](const std::vector<int>& perm) {
            Labeling l(perm.begin(), perm.end());
            Labeling via_rc = rc(grid, l);
            Labeling via_cr = cr(grid, l);
            ++partial[block][std::vector<int>(via_rc.begin(), via_rc.end())].first;
            ++partial[block][std::vector<int>(via_cr.begin(), via_cr.end())].second;
        });
    });
    Tally tally = std::move(partial[0]);
    for (int w = 1; w < workers; ++w)
        for (const auto& [key, counts] : partial[w]) {
            tally[key].first += counts.first;
            tally[key].second += counts.second;
        }
    return tally;
}

// Exhaustive oracle: run every arrangement of 1..rc through the sort
// engine and count the ones landing on A.
inline BigUint brute_force_preimages(const SortedMatrix& A, SortOrder order, int workers = 1) {
    int n = A.r * A.c;
    if (n > 10) throw std::invalid_argument("brute force bounded to rc <= 10");
    Poset grid = build_grid(A.r, A.c);
    Labeling target(A.entries.begin(), A.entries.end());
    if (workers < 1) workers = 1;
    std::vector<uint64_t> partial(workers, 0);
    parallel_blocks(factorial_u64(n), workers, [&](int block, uint64_t from, uint64_t to) {
        visit_permutations(n, from, to, [&](const std::vector<int>& perm) {
            Labeling l(perm.begin(), perm.end());
            Labeling sorted = order == SortOrder::RC ? rc(grid, l) : cr(grid, l);
            if (sorted == target) ++partial[block];
        });
    });
    uint64_t count = 0;
    for (uint64_t p : partial) count += p;
    return BigUint(count);
}

}  // namespace nmu
