#pragma once

#include "canon/bijections/flips.hpp"
#include "canon/dyck.hpp"
#include "canon/errors.hpp"
#include "canon/nonnesting.hpp"
#include "canon/word.hpp"

#include <string>
#include <vector>

namespace canon {

namespace detail {

/// Half-open step range [begin, end) lying strictly after the m-th E and
/// before the (l+1)-st N. Empty when the N comes first.
inline std::pair<std::size_t, std::size_t> removal_window(const std::vector<Step>& s, int m, int l) {
    std::size_t begin = 0, end = s.size();
    int e = 0, nn = 0;
    bool have_begin = m == 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == Step::E) {
            if (++e == m) {
                begin = i + 1;
                have_begin = true;
            }
        } else if (++nn == l + 1) {
            end = i;
            break;
        }
    }
    if (!have_begin || begin >= end) return {0, 0};
    return {begin, end};
}

inline void check_removal_params(const DyckPath& d, int m, int l) {
    if (m < 1 || m >= d.n() || l < 0 || l >= m)
        throw domain_error("removal needs 0 <= l < m < n, got m=" + std::to_string(m) + ", l=" + std::to_string(l) +
                           ", n=" + std::to_string(d.n()));
}

inline std::pair<int, int> top_two(const std::vector<int>& S) {
    if (S.empty()) throw domain_error("descent removal needs a nonempty descent set");
    const int m = S.back();
    const int l = S.size() >= 2 ? S[S.size() - 2] : 0;
    return {m, l};
}

} // namespace detail

/// Path-level descent removal for the top element m of S, with l the next one (or 0).
inline DyckPath hat_g(const DyckPath& d, int m, int l) {
    detail::check_removal_params(d, m, l);
    std::vector<Step> s = d.steps();
    const auto [b, e] = detail::removal_window(s, m, l);
    if (b == e || s[b] == s[e - 1]) return d;
    const auto first = s.begin() + static_cast<std::ptrdiff_t>(b);
    const auto last = s.begin() + static_cast<std::ptrdiff_t>(e);
    if (s[b] == Step::E) {
        auto run_end = first;
        while (run_end != last && *run_end == Step::E) ++run_end;
        std::rotate(first, run_end, last);
    } else {
        auto run_begin = last;
        while (run_begin != first && *(run_begin - 1) == Step::E) --run_begin;
        std::rotate(first, run_begin, last);
    }
    return DyckPath(std::move(s));
}

/// Undoes hat_g: a window N..E had its leading E-run moved to the back, and
/// a window E..N had its trailing E-run moved to the front.
inline DyckPath hat_g_inverse(const DyckPath& d, int m, int l) {
    detail::check_removal_params(d, m, l);
    std::vector<Step> s = d.steps();
    const auto [b, e] = detail::removal_window(s, m, l);
    if (b == e || s[b] == s[e - 1]) return d;
    const auto first = s.begin() + static_cast<std::ptrdiff_t>(b);
    const auto last = s.begin() + static_cast<std::ptrdiff_t>(e);
    if (s[b] == Step::N) {
        auto run_begin = last;
        while (run_begin != first && *(run_begin - 1) == Step::E) --run_begin;
        std::rotate(first, run_begin, last);
    } else {
        auto run_end = first;
        while (run_end != last && *run_end == Step::E) ++run_end;
        std::rotate(first, run_end, last);
    }
    return DyckPath(std::move(s));
}

inline DyckPath hat_g(const DyckPath& d, const std::vector<int>& S) {
    const auto [m, l] = detail::top_two(S);
    return hat_g(d, m, l);
}

inline DyckPath hat_g_inverse(const DyckPath& d, const std::vector<int>& S) {
    const auto [m, l] = detail::top_two(S);
    return hat_g_inverse(d, m, l);
}

/// One removal step C_n^S -> C_n^{S minus max S}; s(w) must be reverse-layered.
inline Multipermutation g_step(const Multipermutation& w) {
    const Permutation sigma = s_of(w);
    std::vector<int> S = descent_set(sigma);
    if (sigma != lambda_of(S, sigma.size()))
        throw domain_error("class of " + format_word(w) + " is not reverse-layered");
    const DyckPath d = hat_g(dy(w), S);
    S.pop_back();
    return pi_from(lambda_of(S, sigma.size()), d);
}

/// Every intermediate word of the removal chain, starting with w and ending in the identity class.
inline std::vector<Multipermutation> g_chain(const Multipermutation& w) {
    std::vector<Multipermutation> chain{w};
    while (!s_of(chain.back()).is_identity()) chain.push_back(g_step(chain.back()));
    return chain;
}

inline Multipermutation g_S(const Multipermutation& w) { return g_chain(w).back(); }

/// Inverse of g_S: w in the identity class, S the descent set to restore.
inline Multipermutation g_S_inverse(const Multipermutation& w, const std::vector<int>& S) {
    const int n = w.n();
    if (!s_of(w).is_identity()) throw domain_error("word " + format_word(w) + " is not in the identity class");
    (void)lambda_of(S, n);  // validates S
    DyckPath d = dy(w);
    for (std::size_t j = 1; j <= S.size(); ++j) {
        const int m = S[j - 1];
        const int l = j >= 2 ? S[j - 2] : 0;
        d = hat_g_inverse(d, m, l);
    }
    return pi_from(lambda_of(S, n), d);
}

/// phi_sigma = g_S o f_sigma : C_n^sigma -> C_n^id.
inline Multipermutation phi_sigma(const Multipermutation& w) { return g_S(f_sigma(w)); }

inline Multipermutation phi_sigma_inverse(const Multipermutation& w, const Permutation& sigma) {
    if (w.n() != sigma.size()) throw domain_error("size mismatch between word and sigma");
    return f_sigma_inverse(g_S_inverse(w, descent_set(sigma)), sigma);
}

} // namespace canon
