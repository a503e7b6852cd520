#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace nmu {

inline uint64_t factorial_u64(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial out of 64-bit range");
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

// Permutation of 1..n with the given lexicographic rank.
inline std::vector<int> nth_permutation(int n, uint64_t rank) {
    std::vector<int> avail(n);
    for (int i = 0; i < n; ++i) avail[i] = i + 1;
    std::vector<int> out;
    out.reserve(n);
    for (int i = n; i > 0; --i) {
        uint64_t f = factorial_u64(i - 1);
        size_t d = static_cast<size_t>(rank / f);
        rank %= f;
        out.push_back(avail[d]);
        avail.erase(avail.begin() + static_cast<long>(d));
    }
    return out;
}

// Visit permutations of 1..n with ranks in [from, to), lexicographically.
template <class F>
void visit_permutations(int n, uint64_t from, uint64_t to, F&& f) {
    if (from >= to) return;
    std::vector<int> perm = nth_permutation(n, from);
    for (uint64_t i = from; i < to; ++i) {
        f(perm);
        std::next_permutation(perm.begin(), perm.end());
    }
}

// Split [0, total) into per-worker contiguous blocks and run them on
// threads. Blocks are indexed in order, so block-wise aggregation does
// not depend on scheduling.
inline void parallel_blocks(uint64_t total, int workers,
                            const std::function<void(int, uint64_t, uint64_t)>& run_block) {
    if (workers < 1) workers = 1;
    if (total == 0) return;
    if (workers == 1 || total < 2 * static_cast<uint64_t>(workers)) {
        run_block(0, 0, total);
        return;
    }
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        uint64_t from = total * static_cast<uint64_t>(w) / static_cast<uint64_t>(workers);
        uint64_t to = total * static_cast<uint64_t>(w + 1) / static_cast<uint64_t>(workers);
        threads.emplace_back([&run_block, w, from, to] { run_block(w, from, to); });
    }
    for (auto& t : threads) t.join();
}

// Fisher-Yates with the draw spelled out; std::shuffle and the standard
// distributions are not bit-stable across implementations.
inline std::vector<int> random_permutation(std::mt19937_64& gen, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(gen() % static_cast<uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

}  // namespace nmu
