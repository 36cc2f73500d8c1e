#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// except for the plain value types; everything is recomputed from definitions.

#include "canon/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Path = std::string;  // over {E, N}

inline int des(const Word& w) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) c += w[i] > w[i + 1];
    return c;
}

inline int plat(const Word& w) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) c += w[i] == w[i + 1];
    return c;
}

/// All words with k copies of each of 1..n, by recursion on remaining counts.
inline void multiset_words(int n, int k, std::vector<Word>& out) {
    std::vector<int> left(static_cast<std::size_t>(n) + 1, k);
    Word cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == n * k) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (left[static_cast<std::size_t>(v)] == 0) continue;
            --left[static_cast<std::size_t>(v)];
            cur.push_back(v);
            self(self);
            cur.pop_back();
            ++left[static_cast<std::size_t>(v)];
        }
    };
    rec(rec);
}

inline std::vector<Word> multiset_words(int n, int k) {
    std::vector<Word> out;
    multiset_words(n, k, out);
    return out;
}

inline std::vector<Word> permutations(int n) { return multiset_words(n, 1); }

/// No i<j<l<m with w_i = w_m != w_j = w_l.
inline bool avoids_abba(const Word& w) {
    const std::size_t L = w.size();
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = i + 1; j < L; ++j)
            for (std::size_t l = j + 1; l < L; ++l)
                for (std::size_t m = l + 1; m < L; ++m)
                    if (w[i] == w[m] && w[j] == w[l] && w[i] != w[j]) return false;
    return true;
}

/// Subsequence test by trying every index subset of the right size.
inline bool contains_pattern(const Word& w, const Word& p) {
    const std::size_t L = w.size(), m = p.size();
    if (m > L) return false;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        bool ok = true;
        for (std::size_t a = 0; a < m && ok; ++a)
            for (std::size_t b = 0; b < m && ok; ++b) {
                const int pw = (w[idx[a]] > w[idx[b]]) - (w[idx[a]] < w[idx[b]]);
                const int pp = (p[a] > p[b]) - (p[a] < p[b]);
                ok = pw == pp;
            }
        if (ok) return true;
        std::size_t i = m;
        while (i > 0 && idx[i - 1] == L - m + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Subsequence of j-th copies (1-based).
inline Word copy_subsequence(const Word& w, int j) {
    std::map<int, int> seen;
    Word out;
    for (int v : w)
        if (++seen[v] == j) out.push_back(v);
    return out;
}

inline bool canon(const Word& w, int k) {
    for (int j = 2; j <= k; ++j)
        if (copy_subsequence(w, j) != copy_subsequence(w, 1)) return false;
    return true;
}

/// Arcs between consecutive copies; nonnesting if no (i,m),(j,l) with i<j<l<m.
inline bool block_nonnesting(const Word& w) {
    std::vector<std::pair<int, int>> arcs;
    std::map<int, int> prev;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        auto it = prev.find(w[static_cast<std::size_t>(i)]);
        if (it != prev.end()) arcs.push_back({it->second, i});
        prev[w[static_cast<std::size_t>(i)]] = i;
    }
    for (const auto& a : arcs)
        for (const auto& b : arcs)
            if (a.first < b.first && b.second < a.second) return false;
    return true;
}

/// Every E/N word of length 2n, filtered by the prefix condition.
inline std::vector<Path> dyck_paths(int n) {
    std::vector<Path> out;
    const int L = 2 * n;
    for (unsigned long mask = 0; mask < (1ul << L); ++mask) {
        Path p;
        int h = 0;
        bool ok = true;
        for (int i = 0; i < L && ok; ++i) {
            const bool east = !((mask >> (L - 1 - i)) & 1ul);
            p += east ? 'E' : 'N';
            h += east ? 1 : -1;
            ok = h >= 0;
        }
        if (ok && h == 0) out.push_back(p);
    }
    return out;
}

struct Peaks {
    int pea = 0, lpea = 0, hpea = 0;
};

inline Peaks peaks(const Path& p) {
    Peaks r;
    int x = 0, y = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 'E') ++x;
        else ++y;
        if (p[i] == 'E' && i + 1 < p.size() && p[i + 1] == 'N') {
            ++r.pea;
            if (x == y + 1) ++r.lpea;
            else ++r.hpea;
        }
    }
    return r;
}

inline canon::BivariatePoly poly_of(const std::map<std::pair<int, int>, long long>& counts) {
    canon::BivariatePoly p;
    for (const auto& [e, c] : counts) p.add_term(e.first, e.second, c);
    return p;
}

inline canon::BivariatePoly eulerian(int n) {
    std::map<std::pair<int, int>, long long> c;
    for (const Word& w : permutations(n)) ++c[{des(w), 0}];
    return poly_of(c);
}

inline canon::BivariatePoly narayana(int n) {
    std::map<std::pair<int, int>, long long> c;
    for (const Path& p : dyck_paths(n)) {
        const Peaks pk = peaks(p);
        ++c[{pk.hpea, pk.lpea}];
    }
    return poly_of(c);
}

/// Descent/plateau polynomial over every k=2 word avoiding abba, optionally
/// restricted to first-copy subsequence sigma.
inline canon::BivariatePoly nonnesting_distribution(int n, const Word* sigma = nullptr) {
    std::map<std::pair<int, int>, long long> c;
    for (const Word& w : multiset_words(n, 2)) {
        if (!avoids_abba(w)) continue;
        if (sigma && copy_subsequence(w, 1) != *sigma) continue;
        ++c[{des(w), plat(w)}];
    }
    return poly_of(c);
}

template <class Pred>
canon::BivariatePoly filtered_distribution(int n, int k, Pred pred) {
    std::map<std::pair<int, int>, long long> c;
    for (const Word& w : multiset_words(n, k))
        if (pred(w)) ++c[{des(w), plat(w)}];
    return poly_of(c);
}

} // namespace oracle
