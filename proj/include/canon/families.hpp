#pragma once

#include "canon/dyck.hpp"
#include "canon/nonnesting.hpp"
#include "canon/poly.hpp"
#include "canon/word.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace canon {

/// Commutative fold of t^des * u^plat over a stream of words. Partial
/// accumulators may be merged in any order.
class DistributionAccumulator {
public:
    void add(std::span<const int> w) {
        const WordStatistics s = statistics(w);
        ++counts_[{s.des, s.plat}];
        ++size_;
    }
    void add(const Multipermutation& w) { add(w.word()); }
    void add(const Permutation& p) { add(p.word()); }

    void merge(const DistributionAccumulator& o) {
        for (const auto& [e, c] : o.counts_) counts_[e] += c;
        size_ += o.size_;
    }

    std::uint64_t size() const noexcept { return size_; }

    BivariatePoly poly() const {
        BivariatePoly p;
        for (const auto& [e, c] : counts_) p.add_term(e.first, e.second, c);
        return p;
    }

private:
    std::map<Exponents, std::uint64_t> counts_;
    std::uint64_t size_ = 0;
};

template <class Range>
BivariatePoly distribution(const Range& words) {
    DistributionAccumulator acc;
    for (const auto& w : words) acc.add(w);
    return acc.poly();
}

/// A_n(t) by summing t^des over S_n.
inline BivariatePoly eulerian_enumerated(int n, std::uint64_t cap = default_cap) {
    DistributionAccumulator acc;
    for_each_permutation(n, [&](const Permutation& p) { acc.add(p); }, cap);
    return acc.poly();
}

/// A_n(t) from A(n, j) = (j + 1) A(n-1, j) + (n - j) A(n-1, j-1).
inline BivariatePoly eulerian_recurrence(int n) {
    std::vector<bigint> row{1};  // A_0 = A_1 = 1
    for (int m = 2; m <= n; ++m) {
        std::vector<bigint> next(static_cast<std::size_t>(m), 0);
        for (int j = 0; j < m; ++j) {
            if (j < m - 1) next[static_cast<std::size_t>(j)] += (j + 1) * row[static_cast<std::size_t>(j)];
            if (j >= 1) next[static_cast<std::size_t>(j)] += (m - j) * row[static_cast<std::size_t>(j - 1)];
        }
        row = std::move(next);
    }
    BivariatePoly p;
    for (std::size_t j = 0; j < row.size(); ++j) p.add_term(static_cast<int>(j), 0, row[j]);
    return p;
}

/// Enumerates S_n for n <= 8 and uses the recurrence beyond.
inline BivariatePoly eulerian(int n) {
    if (n < 0) throw domain_error("n must be nonnegative");
    return n <= 8 ? eulerian_enumerated(n, UINT64_MAX) : eulerian_recurrence(n);
}

/// N_n(t, u): t^hpea * u^lpea summed over D_n.
inline BivariatePoly narayana(int n, std::uint64_t cap = default_cap) {
    if (n < 0) throw domain_error("n must be nonnegative");
    std::map<Exponents, std::uint64_t> counts;
    for_each_dyck(
        n,
        [&](const DyckPath& d) {
            const PeakStats ps = peak_stats(d);
            ++counts[{ps.hpea, ps.lpea}];
        },
        cap);
    BivariatePoly p;
    for (const auto& [e, c] : counts) p.add_term(e.first, e.second, c);
    return p;
}

/// N_n(t, t) = sum_{r=1}^{n} (1/n) binom(n, r) binom(n, r-1) t^r.
inline BivariatePoly narayana_closed(int n) {
    if (n < 1) throw domain_error("narayana_closed requires n >= 1");
    BivariatePoly p;
    for (int r = 1; r <= n; ++r) p.add_term(r, 0, binomial(n, r) * binomial(n, r - 1) / n);
    return p;
}

/// C_n(t, u) over all nonnesting words.
inline BivariatePoly nonnesting_distribution(int n, std::uint64_t cap = default_cap) {
    DistributionAccumulator acc;
    for_each_nonnesting(n, [&](const Multipermutation& w) { acc.add(w); }, cap);
    return acc.poly();
}

/// C_n^sigma(t, u) over the words w with s(w) = sigma.
inline BivariatePoly class_distribution(const Permutation& sigma, std::uint64_t cap = default_cap) {
    DistributionAccumulator acc;
    for_each_in_class(sigma, [&](const Multipermutation& w) { acc.add(w); }, cap);
    return acc.poly();
}

} // namespace canon
