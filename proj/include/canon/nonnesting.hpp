#pragma once

#include "canon/counting.hpp"
#include "canon/dyck.hpp"
#include "canon/errors.hpp"
#include "canon/word.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace canon {

/// Points 1..n_points on a line joined by arcs (i, j), i < j. Arcs are kept sorted.
struct ArcDiagram {
    int n_points = 0;
    std::vector<std::pair<int, int>> arcs;

    ArcDiagram() = default;
    ArcDiagram(int points, std::vector<std::pair<int, int>> a) : n_points(points), arcs(std::move(a)) {
        std::sort(arcs.begin(), arcs.end());
    }

    /// Two arcs (i, m), (j, l) with i < j < l < m.
    bool has_nesting() const {
        for (const auto& [i, m] : arcs)
            for (const auto& [j, l] : arcs)
                if (i < j && l < m) return true;
        return false;
    }

    /// Two arcs (i, l), (j, m) with i < j < l < m.
    bool has_crossing() const {
        for (const auto& [i, l] : arcs)
            for (const auto& [j, m] : arcs)
                if (i < j && j < l && l < m) return true;
        return false;
    }

    friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
};

/// Sorted pair list, e.g. "(1,3) (2,5)".
inline std::string format_arcs(const ArcDiagram& a) {
    std::string s;
    for (std::size_t i = 0; i < a.arcs.size(); ++i) {
        if (i) s += ' ';
        s += '(' + std::to_string(a.arcs[i].first) + ',' + std::to_string(a.arcs[i].second) + ')';
    }
    return s;
}

namespace detail {
inline void require_k2(const Multipermutation& w, const char* op) {
    if (w.k() != 2) throw domain_error(std::string(op) + " requires k = 2, got k = " + std::to_string(w.k()));
}
} // namespace detail

/// First- and second-copy subsequences coincide.
inline bool is_nonnesting(const Multipermutation& w) {
    detail::require_k2(w, "is_nonnesting");
    return w.copy_subsequence(1) == w.copy_subsequence(2);
}

/// Unlabelled matching: one arc per value, joining its two copies (1-based positions).
inline ArcDiagram mat(const Multipermutation& w) {
    detail::require_k2(w, "mat");
    std::vector<int> first(static_cast<std::size_t>(w.n()) + 1, 0);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < w.size(); ++i) {
        int& f = first[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])];
        if (f == 0) f = i + 1;
        else arcs.emplace_back(f, i + 1);
    }
    return ArcDiagram(w.size(), std::move(arcs));
}

inline Permutation s_of(const Multipermutation& w) {
    if (!is_nonnesting(w)) throw domain_error("word " + format_word(w) + " is not nonnesting");
    return Permutation(w.copy_subsequence(1));
}

/// E for each first copy, N for each second copy.
inline DyckPath dy(const Multipermutation& w) {
    if (!is_nonnesting(w)) throw domain_error("word " + format_word(w) + " is not nonnesting");
    std::vector<bool> seen(static_cast<std::size_t>(w.n()) + 1, false);
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(w.size()));
    for (int v : w.entries()) {
        const auto idx = static_cast<std::size_t>(v);
        steps.push_back(seen[idx] ? Step::N : Step::E);
        seen[idx] = true;
    }
    return DyckPath(std::move(steps));
}

/// The unique nonnesting word with s(w) = sigma and dy(w) = d: walk the path on
/// the grid whose columns and rows are both labelled sigma_1..sigma_n.
inline Multipermutation pi_from(const Permutation& sigma, const DyckPath& d) {
    if (sigma.size() != d.n())
        throw domain_error("size mismatch: |sigma| = " + std::to_string(sigma.size()) + ", path n = " + std::to_string(d.n()));
    std::vector<int> out;
    out.reserve(d.length());
    std::size_t col = 0, row = 0;
    for (Step s : d.steps()) out.push_back(s == Step::E ? sigma[col++] : sigma[row++]);
    return Multipermutation(std::move(out), 2);
}

/// Visits S_n in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f, std::uint64_t cap = default_cap) {
    check_cap(saturate_u64(factorial(n)), cap);
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    do {
        f(Permutation(e));
    } while (std::next_permutation(e.begin(), e.end()));
}

inline std::vector<Permutation> all_permutations(int n, std::uint64_t cap = default_cap) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, cap);
    return out;
}

inline bigint count_nonnesting(int n) { return factorial(n) * catalan(n); }

/// Visits C_n as pi_from(sigma, d), sigma in lexicographic order and, for each
/// sigma, d in lexicographic order.
template <class F>
void for_each_nonnesting(int n, F&& f, std::uint64_t cap = default_cap) {
    check_cap(saturate_u64(count_nonnesting(n)), cap);
    const std::vector<DyckPath> paths = all_dyck(n, UINT64_MAX);
    for_each_permutation(
        n,
        [&](const Permutation& sigma) {
            for (const DyckPath& d : paths) f(pi_from(sigma, d));
        },
        UINT64_MAX);
}

/// Visits the class C_n^sigma in lexicographic order of dy.
template <class F>
void for_each_in_class(const Permutation& sigma, F&& f, std::uint64_t cap = default_cap) {
    for_each_dyck(sigma.size(), [&](const DyckPath& d) { f(pi_from(sigma, d)); }, cap);
}

} // namespace canon
