#pragma once

#include "canon/counting.hpp"
#include "canon/errors.hpp"
#include "canon/families.hpp"
#include "canon/nonnesting.hpp"
#include "canon/pattern.hpp"
#include "canon/poly.hpp"
#include "canon/word.hpp"

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <string>
#include <vector>

namespace canon {

/// Visits every permutation of the multiset {1^k, ..., n^k} in lexicographic order.
template <class F>
void for_each_multiperm(int n, int k, F&& f, std::uint64_t cap = default_cap) {
    if (n < 0 || k < 1) throw domain_error("need n >= 0 and k >= 1");
    check_cap(saturate_u64(multinomial_uniform(n, k)), cap);
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    for (int v = 1; v <= n; ++v) e.insert(e.end(), static_cast<std::size_t>(k), v);
    do {
        f(Multipermutation(e, k));
    } while (std::next_permutation(e.begin(), e.end()));
}

inline std::vector<Multipermutation> all_multiperms(int n, int k, std::uint64_t cap = default_cap) {
    std::vector<Multipermutation> out;
    for_each_multiperm(n, k, [&](const Multipermutation& w) { out.push_back(w); }, cap);
    return out;
}

// ---- A_n^k ---------------------------------------------------------------

/// Membership in A_n^k through the pattern matcher.
inline bool is_in_A(const Multipermutation& w) {
    return !pattern_occurs(w.word(), {1, 2, 2, 1}) && !pattern_occurs(w.word(), {2, 1, 1, 2});
}

/// Same predicate, O(n * len): no value may have two copies strictly between
/// the first and last copies of another value.
inline bool is_in_A_fast(const Multipermutation& w) {
    const int n = w.n();
    std::vector<int> first(static_cast<std::size_t>(n) + 1, -1), last(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i < w.size(); ++i) {
        const auto v = static_cast<std::size_t>(w[static_cast<std::size_t>(i)]);
        if (first[v] < 0) first[v] = i;
        last[v] = i;
    }
    std::vector<int> inside(static_cast<std::size_t>(n) + 1);
    for (int a = 1; a <= n; ++a) {
        std::fill(inside.begin(), inside.end(), 0);
        for (int i = first[static_cast<std::size_t>(a)] + 1; i < last[static_cast<std::size_t>(a)]; ++i) {
            const int b = w[static_cast<std::size_t>(i)];
            if (b != a && ++inside[static_cast<std::size_t>(b)] >= 2) return false;
        }
    }
    return true;
}

namespace detail {

enum class Family { A, B };

/// Depth-first generator in lexicographic order. `since[a][b]` counts copies
/// of b placed after the first (family A) or latest (family B) copy of a,
/// tracked only while a still has copies to place; reaching 2 is fatal.
template <class F>
class PrunedGenerator {
public:
    PrunedGenerator(Family fam, int n, int k, F& f, std::uint64_t cap)
        : fam_(fam), n_(n), k_(k), f_(f), cap_(cap), placed_(static_cast<std::size_t>(n) + 1, 0),
          since_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0) {
        word_.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    }

    void run() { dfs(); }

private:
    int& since(int a, int b) { return since_[static_cast<std::size_t>(a * (n_ + 1) + b)]; }

    void dfs() {
        if (static_cast<int>(word_.size()) == n_ * k_) {
            if (++emitted_ > cap_) throw cap_exceeded(emitted_, cap_);
            f_(Multipermutation(word_, k_));
            return;
        }
        for (int b = 1; b <= n_; ++b) {
            int& pb = placed_[static_cast<std::size_t>(b)];
            if (pb == k_) continue;
            // open values: started but not finished
            bool ok = true;
            std::vector<int> bumped;
            for (int a = 1; a <= n_ && ok; ++a) {
                const int pa = placed_[static_cast<std::size_t>(a)];
                if (a == b || pa == 0 || pa == k_) continue;
                bumped.push_back(a);
                if (++since(a, b) >= 2) ok = false;
            }
            std::vector<int> saved_row;
            if (ok) {
                if (fam_ == Family::B || pb == 0) {
                    saved_row.assign(since_.begin() + b * (n_ + 1), since_.begin() + (b + 1) * (n_ + 1));
                    std::fill(since_.begin() + b * (n_ + 1), since_.begin() + (b + 1) * (n_ + 1), 0);
                }
                ++pb;
                word_.push_back(b);
                dfs();
                word_.pop_back();
                --pb;
                if (!saved_row.empty()) std::copy(saved_row.begin(), saved_row.end(), since_.begin() + b * (n_ + 1));
            }
            for (int a : bumped) --since(a, b);
        }
    }

    Family fam_;
    int n_, k_;
    F& f_;
    std::uint64_t cap_;
    std::uint64_t emitted_ = 0;
    std::vector<int> placed_;
    std::vector<int> since_;
    std::vector<int> word_;
};

template <class F>
void run_pruned(Family fam, int n, int k, F&& f, std::uint64_t cap) {
    if (n < 0 || k < 1) throw domain_error("need n >= 0 and k >= 1");
    PrunedGenerator<std::remove_reference_t<F>> g(fam, n, k, f, cap);
    g.run();
}

} // namespace detail

/// Visits A_n^k in lexicographic order without scanning the full multiset.
/// The cap bounds the number of words emitted.
template <class F>
void for_each_A(int n, int k, F&& f, std::uint64_t cap = default_cap) {
    detail::run_pruned(detail::Family::A, n, k, f, cap);
}

inline std::vector<Multipermutation> enumerate_A(int n, int k, std::uint64_t cap = default_cap) {
    std::vector<Multipermutation> out;
    for_each_A(n, k, [&](const Multipermutation& w) { out.push_back(w); }, cap);
    return out;
}

inline BivariatePoly a_poly(int n, int k, std::uint64_t cap = default_cap) {
    DistributionAccumulator acc;
    for_each_A(n, k, [&](const Multipermutation& w) { acc.add(w); }, cap);
    return acc.poly();
}

/// u^((k-3)n+2) (u^2+t)^(n-1) A_n(t); stated for k >= 3 and n >= 1 only.
inline BivariatePoly a_closed(int n, int k) {
    if (k < 3) throw domain_error("closed form for A_n^k holds for k >= 3; for k = 2 use the main product formula");
    if (n < 1) throw domain_error("closed form for A_n^k needs n >= 1");
    return BivariatePoly::u((k - 3) * n + 2) * (BivariatePoly::u(2) + BivariatePoly::t()).pow(n - 1) * eulerian(n);
}

inline bigint a_count_formula(int n) { return n < 1 ? bigint(1) : (bigint(1) << (n - 1)) * factorial(n); }

struct OverrunDecomposition {
    Permutation sigma;
    std::vector<int> overruns;  // i in [n-1] with sigma_i overrunning sigma_{i+1}
    friend bool operator==(const OverrunDecomposition&, const OverrunDecomposition&) = default;
};

/// sigma is the order of first occurrences; i is an overrun when the last
/// copy of sigma_i comes after the first copy of sigma_{i+1}.
inline OverrunDecomposition overrun_decompose(const Multipermutation& w) {
    const int n = w.n();
    std::vector<int> first(static_cast<std::size_t>(n) + 1, -1), last(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> order;
    for (int i = 0; i < w.size(); ++i) {
        const int v = w[static_cast<std::size_t>(i)];
        if (first[static_cast<std::size_t>(v)] < 0) {
            first[static_cast<std::size_t>(v)] = i;
            order.push_back(v);
        }
        last[static_cast<std::size_t>(v)] = i;
    }
    std::vector<int> over;
    for (int i = 0; i + 1 < n; ++i) {
        const int a = order[static_cast<std::size_t>(i)], b = order[static_cast<std::size_t>(i + 1)];
        if (last[static_cast<std::size_t>(a)] > first[static_cast<std::size_t>(b)]) over.push_back(i + 1);
    }
    return {Permutation(std::move(order)), std::move(over)};
}

/// Blocks sigma_1^k ... sigma_n^k, then for each overrun i the last copy of
/// sigma_i swaps with the first copy of sigma_{i+1}. Needs k >= 3.
inline Multipermutation overrun_build(const Permutation& sigma, const std::vector<int>& overruns, int k) {
    if (k < 3) throw domain_error("overrun construction needs k >= 3");
    const int n = sigma.size();
    std::vector<int> e;
    for (int i = 0; i < n; ++i) e.insert(e.end(), static_cast<std::size_t>(k), sigma[static_cast<std::size_t>(i)]);
    for (int i : overruns) {
        if (i < 1 || i >= n) throw domain_error("overrun index " + std::to_string(i) + " outside [1, n-1]");
        const std::size_t boundary = static_cast<std::size_t>(i) * static_cast<std::size_t>(k);
        std::swap(e[boundary - 1], e[boundary]);
    }
    return Multipermutation(std::move(e), k);
}

// ---- B_n^k ---------------------------------------------------------------

/// Arcs between consecutive copies of each value, 1-based positions.
inline ArcDiagram block_arcs(const Multipermutation& w) {
    ArcDiagram a;
    a.n_points = w.size();
    std::vector<int> prev(static_cast<std::size_t>(w.n()) + 1, 0);
    for (int i = 1; i <= w.size(); ++i) {
        int& p = prev[static_cast<std::size_t>(w[static_cast<std::size_t>(i - 1)])];
        if (p != 0) a.arcs.push_back({p, i});
        p = i;
    }
    std::sort(a.arcs.begin(), a.arcs.end());
    return a;
}

inline bool is_in_B(const Multipermutation& w) { return !block_arcs(w).has_nesting(); }

template <class F>
void for_each_B(int n, int k, F&& f, std::uint64_t cap = default_cap) {
    detail::run_pruned(detail::Family::B, n, k, f, cap);
}

inline std::vector<Multipermutation> enumerate_B(int n, int k, std::uint64_t cap = default_cap) {
    std::vector<Multipermutation> out;
    for_each_B(n, k, [&](const Multipermutation& w) { out.push_back(w); }, cap);
    return out;
}

/// (kn)! / ((k-1)n + 1)!, valid for k >= 2; n! for k = 1.
inline bigint b_count_formula(int n, int k) {
    if (k < 1 || n < 0) throw domain_error("need n >= 0 and k >= 1");
    if (k == 1) return factorial(n);
    return factorial(k * n) / factorial((k - 1) * n + 1);
}

inline bigint b_count(int n, int k, std::uint64_t cap = default_cap) {
    bigint c = 0;
    for_each_B(n, k, [&](const Multipermutation&) { ++c; }, cap);
    return c;
}

inline BivariatePoly b_poly(int n, int k, std::uint64_t cap = default_cap) {
    DistributionAccumulator acc;
    for_each_B(n, k, [&](const Multipermutation& w) { acc.add(w); }, cap);
    return acc.poly();
}

// ---- C_n^k ---------------------------------------------------------------

inline bool is_canon(const Multipermutation& w) {
    const std::vector<int> s = w.copy_subsequence(1);
    for (int j = 2; j <= w.k(); ++j)
        if (w.copy_subsequence(j) != s) return false;
    return true;
}

namespace detail {
template <class F>
void canon_dfs(const Permutation& sigma, int k, std::vector<int>& progress, std::vector<int>& word, F& f,
               std::uint64_t& emitted, std::uint64_t cap) {
    const int n = sigma.size();
    if (static_cast<int>(word.size()) == n * k) {
        if (++emitted > cap) throw cap_exceeded(emitted, cap);
        f(Multipermutation(word, k));
        return;
    }
    for (int j = 0; j < k; ++j) {
        int& p = progress[static_cast<std::size_t>(j)];
        const int bound = j == 0 ? n : progress[static_cast<std::size_t>(j - 1)];
        if (p >= bound) continue;
        word.push_back(sigma[static_cast<std::size_t>(p)]);
        ++p;
        canon_dfs(sigma, k, progress, word, f, emitted, cap);
        --p;
        word.pop_back();
    }
}
} // namespace detail

/// Visits C_n^{k,sigma} by interleaving copy levels: level j may emit its next
/// entry of sigma only while it trails level j-1. The cap bounds words emitted.
template <class F>
void for_each_canon_class(const Permutation& sigma, int k, F&& f, std::uint64_t cap = default_cap) {
    if (k < 1) throw domain_error("need k >= 1");
    std::vector<int> progress(static_cast<std::size_t>(k), 0), word;
    std::uint64_t emitted = 0;
    detail::canon_dfs(sigma, k, progress, word, f, emitted, cap);
}

/// C_n^k as the union of the classes, sigma in lexicographic order.
template <class F>
void for_each_canon(int n, int k, F&& f, std::uint64_t cap = default_cap) {
    std::uint64_t emitted = 0;
    for_each_permutation(
        n,
        [&](const Permutation& sigma) {
            for_each_canon_class(
                sigma, k,
                [&](const Multipermutation& w) {
                    if (++emitted > cap) throw cap_exceeded(emitted, cap);
                    f(w);
                },
                UINT64_MAX);
        },
        UINT64_MAX);
}

inline std::vector<Multipermutation> enumerate_canon_class(const Permutation& sigma, int k, std::uint64_t cap = default_cap) {
    std::vector<Multipermutation> out;
    for_each_canon_class(sigma, k, [&](const Multipermutation& w) { out.push_back(w); }, cap);
    return out;
}

inline std::vector<Multipermutation> enumerate_canon(int n, int k, std::uint64_t cap = default_cap) {
    std::vector<Multipermutation> out;
    for_each_canon(n, k, [&](const Multipermutation& w) { out.push_back(w); }, cap);
    return out;
}

inline BivariatePoly c_k_class_poly(const Permutation& sigma, int k, std::uint64_t cap = default_cap) {
    DistributionAccumulator acc;
    for_each_canon_class(sigma, k, [&](const Multipermutation& w) { acc.add(w); }, cap);
    return acc.poly();
}

inline BivariatePoly c_k_poly(int n, int k, std::uint64_t cap = default_cap) {
    DistributionAccumulator acc;
    for_each_canon(n, k, [&](const Multipermutation& w) { acc.add(w); }, cap);
    return acc.poly();
}

} // namespace canon
