#pragma once

#include "canon/dyck.hpp"
#include "canon/errors.hpp"
#include "canon/nonnesting.hpp"
#include "canon/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

namespace canon {

/// Swaps EN <-> NE around `cell` when d runs along two of its sides; otherwise returns d.
inline DyckPath flip_cell(const DyckPath& d, Cell cell) {
    std::vector<Step> s = d.steps();
    int x = 0, y = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (x == cell.x && y == cell.y) {
            if (s[i] != s[i + 1]) std::swap(s[i], s[i + 1]);
            break;
        }
        if (s[i] == Step::E) ++x;
        else ++y;
        if (x > cell.x && y > cell.y) break;
    }
    return DyckPath(std::move(s));
}

inline DyckPath apply_flips(DyckPath d, const std::vector<Cell>& cells) {
    for (const Cell& c : cells) d = flip_cell(d, c);
    return d;
}

inline bool values_adjacent(const Permutation& sigma, int k) {
    const auto pos = sigma.positions();
    return std::abs(pos[static_cast<std::size_t>(k)] - pos[static_cast<std::size_t>(k + 1)]) == 1;
}

/// The cell whose row and column are labelled {k, k+1}; it lies strictly below the diagonal.
inline Cell value_pair_cell(const Permutation& sigma, int k) {
    if (k < 1 || k >= sigma.size()) throw domain_error("flip value k=" + std::to_string(k) + " outside [1, n-1]");
    const auto pos = sigma.positions();
    const int p = pos[static_cast<std::size_t>(k)], q = pos[static_cast<std::size_t>(k + 1)];
    return {std::max(p, q), std::min(p, q)};
}

/// f_k : C_n^sigma -> C_n^{s_k sigma}, preserving (des, plat). Self-inverse.
inline Multipermutation f_k_flip(const Multipermutation& w, int k) {
    const Permutation sigma = s_of(w);
    const Cell cell = value_pair_cell(sigma, k);
    if (values_adjacent(sigma, k))
        throw domain_error("values " + std::to_string(k) + " and " + std::to_string(k + 1) + " are adjacent in " + format_word(sigma));
    return pi_from(sigma.swap_values(k), flip_cell(dy(w), cell));
}

/// The reverse-layered permutation with descent set S (1-based, subset of [n-1]).
inline Permutation lambda_of(const std::vector<int>& S, int n) {
    std::vector<int> cuts;
    int prev = 0;
    for (int d : S) {
        if (d <= prev || d >= n) throw domain_error("descent set must be strictly increasing within [1, n-1]");
        cuts.push_back(d);
        prev = d;
    }
    cuts.push_back(n);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    int start = 0;
    for (int cut : cuts) {
        // layer occupies positions start+1..cut and values n-cut+1..n-start
        for (int v = n - cut + 1; v <= n - start; ++v) out.push_back(v);
        start = cut;
    }
    return Permutation(std::move(out));
}

inline Permutation lambda_of(const Permutation& sigma) { return lambda_of(descent_set(sigma), sigma.size()); }

inline int non_inversions(const Permutation& sigma) {
    int c = 0;
    for (int i = 0; i < sigma.size(); ++i)
        for (int j = i + 1; j < sigma.size(); ++j) c += sigma[static_cast<std::size_t>(i)] < sigma[static_cast<std::size_t>(j)];
    return c;
}

/// Canonical valid sequence: repeatedly take the largest entry l placed
/// differently in sigma and lambda, let i be its position in lambda, and apply
/// s_k with k = sigma_i. Returns the k's in order of application.
inline std::vector<int> valid_sequence(const Permutation& sigma) {
    const Permutation lambda = lambda_of(sigma);
    std::vector<int> seq;
    Permutation cur = sigma;
    while (cur != lambda) {
        const auto pos_cur = cur.positions();
        const auto pos_lam = lambda.positions();
        int l = sigma.size();
        while (pos_cur[static_cast<std::size_t>(l)] == pos_lam[static_cast<std::size_t>(l)]) --l;
        const int k = cur[static_cast<std::size_t>(pos_lam[static_cast<std::size_t>(l)])];
        seq.push_back(k);
        cur = cur.swap_values(k);
    }
    return seq;
}

/// Cells flipped, in order, when applying the transpositions of `seq` to sigma.
inline std::vector<Cell> flip_cells(const Permutation& sigma, const std::vector<int>& seq) {
    std::vector<Cell> cells;
    Permutation cur = sigma;
    for (int k : seq) {
        cells.push_back(value_pair_cell(cur, k));
        cur = cur.swap_values(k);
    }
    return cells;
}

namespace detail {
inline void valid_sequences_dfs(const Permutation& cur, const Permutation& lambda, std::vector<int>& seq,
                                std::vector<std::vector<int>>& out) {
    if (cur == lambda) {
        out.push_back(seq);
        return;
    }
    const auto pos = cur.positions();
    for (int k = 1; k < cur.size(); ++k) {
        const int p = pos[static_cast<std::size_t>(k)], q = pos[static_cast<std::size_t>(k + 1)];
        if (q - p < 2) continue;  // k+1 must sit to the right of k, not adjacent
        seq.push_back(k);
        valid_sequences_dfs(cur.swap_values(k), lambda, seq, out);
        seq.pop_back();
    }
}
} // namespace detail

/// Every valid sequence from sigma to lambda^{Des(sigma)}. Exponential; small n only.
inline std::vector<std::vector<int>> all_valid_sequences(const Permutation& sigma) {
    std::vector<std::vector<int>> out;
    std::vector<int> seq;
    detail::valid_sequences_dfs(sigma, lambda_of(sigma), seq, out);
    return out;
}

/// Path-level f_sigma through the canonical valid sequence.
inline DyckPath f_sigma_path(const DyckPath& d, const Permutation& sigma) {
    return apply_flips(d, flip_cells(sigma, valid_sequence(sigma)));
}

inline DyckPath f_sigma_path_inverse(const DyckPath& d, const Permutation& sigma) {
    std::vector<Cell> cells = flip_cells(sigma, valid_sequence(sigma));
    std::reverse(cells.begin(), cells.end());
    return apply_flips(d, cells);
}

/// f_sigma : C_n^sigma -> C_n^{lambda}, lambda = lambda^{Des(sigma)}.
inline Multipermutation f_sigma(const Multipermutation& w) {
    const Permutation sigma = s_of(w);
    return pi_from(lambda_of(sigma), f_sigma_path(dy(w), sigma));
}

/// Inverse of f_sigma for the given sigma; w must lie in C_n^{lambda^{Des(sigma)}}.
inline Multipermutation f_sigma_inverse(const Multipermutation& w, const Permutation& sigma) {
    if (s_of(w) != lambda_of(sigma))
        throw domain_error("word " + format_word(w) + " is not in the class of " + format_word(lambda_of(sigma)));
    return pi_from(sigma, f_sigma_path_inverse(dy(w), sigma));
}

} // namespace canon
