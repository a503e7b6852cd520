#pragma once

#include "nmu/poset.hpp"

namespace nmu {

using Label = long long;

// Total assignment of integer labels, indexed by element. Bijective
// labelings use exactly {1..n}; multiset labelings allow repeats (the
// two-valued reductions rely on this).
using Labeling = std::vector<Label>;

inline void require_total(const Poset& p, const Labeling& l) {
    if (static_cast<int>(l.size()) != p.size())
        throw std::invalid_argument("labeling does not assign a label to every element");
}

inline bool is_bijective(const Poset& p, const Labeling& l) {
    if (static_cast<int>(l.size()) != p.size()) return false;
    Labeling sorted = l;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < p.size(); ++i)
        if (sorted[i] != i + 1) return false;
    return true;
}

namespace detail {

inline Labeling sort_along(Labeling l, const std::vector<Chain>& chains) {
    std::vector<Label> buf;
    for (const auto& ch : chains) {
        buf.clear();
        for (ElemId e : ch) buf.push_back(l[e]);
        std::sort(buf.begin(), buf.end());
        for (size_t i = 0; i < ch.size(); ++i) l[ch[i]] = buf[i];
    }
    return l;
}

}  // namespace detail

// Reorder the labels within each row so the chain-minimum end holds the
// minimum label. Label multisets per row (hence globally) are preserved.
inline Labeling sort_rows(const Poset& p, const Labeling& l) {
    require_total(p, l);
    return detail::sort_along(l, p.rows);
}

inline Labeling sort_columns(const Poset& p, const Labeling& l) {
    require_total(p, l);
    return detail::sort_along(l, p.columns);
}

// Column sort followed by row sort, and the reverse composition.
inline Labeling rc(const Poset& p, const Labeling& l) { return sort_rows(p, sort_columns(p, l)); }
inline Labeling cr(const Poset& p, const Labeling& l) { return sort_columns(p, sort_rows(p, l)); }

// True when every row and every column is weakly increasing from its
// chain minimum.
inline bool is_sorted(const Poset& p, const Labeling& l) {
    require_total(p, l);
    auto chains_sorted = [&](const std::vector<Chain>& chains) {
        for (const auto& ch : chains)
            for (size_t i = 0; i + 1 < ch.size(); ++i)
                if (l[ch[i]] > l[ch[i + 1]]) return false;
        return true;
    };
    return chains_sorted(p.rows) && chains_sorted(p.columns);
}

inline bool is_linear_extension(const Poset& p, const Labeling& l) {
    if (!is_bijective(p, l)) return false;
    for (ElemId x = 0; x < p.size(); ++x)
        for (ElemId y = 0; y < p.size(); ++y)
            if (p.less(x, y) && l[x] >= l[y]) return false;
    return true;
}

// Non-messing-up check for one labeling: the row sort must not disturb
// sorted columns and vice versa.
inline bool check_nmu(const Poset& p, const Labeling& l) {
    Labeling after_rc = rc(p, l);
    Labeling after_cr = cr(p, l);
    return sort_columns(p, after_rc) == after_rc && sort_rows(p, after_cr) == after_cr;
}

}  // namespace nmu
