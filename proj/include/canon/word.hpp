#pragma once

#include "canon/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace canon {

// Words are sequences of positive integers. Positions reported to users are
// 1-based; positions used internally are 0-based.

/// A bijection on [n], stored in one-line notation.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
        const int n = size();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int v : entries_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw domain_error("not a permutation of 1.." + std::to_string(n));
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> e(static_cast<std::size_t>(n));
        std::iota(e.begin(), e.end(), 1);
        return Permutation(std::move(e));
    }

    static Permutation decreasing(int n) {
        std::vector<int> e(static_cast<std::size_t>(n));
        std::iota(e.rbegin(), e.rend(), 1);
        return Permutation(std::move(e));
    }

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    bool empty() const noexcept { return entries_.empty(); }

    /// 0-based access.
    int operator[](std::size_t i) const { return entries_[i]; }
    /// 1-based access, matching the usual sigma_i notation.
    int at1(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::span<const int> word() const noexcept { return entries_; }

    Permutation reversed() const {
        return Permutation(std::vector<int>(entries_.rbegin(), entries_.rend()), trusted{});
    }

    /// positions()[v] is the 0-based position of value v; index 0 unused.
    std::vector<int> positions() const {
        std::vector<int> pos(entries_.size() + 1, -1);
        for (std::size_t i = 0; i < entries_.size(); ++i) pos[static_cast<std::size_t>(entries_[i])] = static_cast<int>(i);
        return pos;
    }

    /// s_k applied on the left: exchange the values k and k+1.
    Permutation swap_values(int k) const {
        std::vector<int> e = entries_;
        for (int& v : e) {
            if (v == k) v = k + 1;
            else if (v == k + 1) v = k;
        }
        return Permutation(std::move(e), trusted{});
    }

    bool is_identity() const noexcept {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct trusted {};
    Permutation(std::vector<int> e, trusted) : entries_(std::move(e)) {}

    std::vector<int> entries_;
};

/// A word containing exactly k copies of each value in [n].
class Multipermutation {
public:
    Multipermutation() = default;

    Multipermutation(std::vector<int> entries, int k) : entries_(std::move(entries)), k_(k) {
        if (k < 1) throw domain_error("multiplicity must be at least 1");
        if (entries_.size() % static_cast<std::size_t>(k) != 0)
            throw domain_error("length " + std::to_string(entries_.size()) + " is not a multiple of k=" + std::to_string(k));
        n_ = static_cast<int>(entries_.size()) / k;
        std::vector<int> count(static_cast<std::size_t>(n_) + 1, 0);
        for (int v : entries_) {
            if (v < 1 || v > n_) throw domain_error("value " + std::to_string(v) + " outside 1.." + std::to_string(n_));
            if (++count[static_cast<std::size_t>(v)] > k)
                throw domain_error("value " + std::to_string(v) + " occurs more than k=" + std::to_string(k) + " times");
        }
    }

    /// Infers n as the largest entry and k as length / n.
    static Multipermutation infer(std::vector<int> entries) {
        if (entries.empty()) return Multipermutation(std::move(entries), 1);
        const int n = *std::max_element(entries.begin(), entries.end());
        if (n < 1) throw domain_error("entries must be positive");
        const int k = static_cast<int>(entries.size()) / n;
        if (k < 1) throw domain_error("word is shorter than its largest entry");
        return Multipermutation(std::move(entries), k);
    }

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    int size() const noexcept { return static_cast<int>(entries_.size()); }

    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    std::span<const int> word() const noexcept { return entries_; }

    Multipermutation reversed() const {
        Multipermutation r = *this;
        std::reverse(r.entries_.begin(), r.entries_.end());
        return r;
    }

    /// The subsequence formed by the j-th copy (1-based, from the left) of every value.
    std::vector<int> copy_subsequence(int j) const {
        std::vector<int> seen(static_cast<std::size_t>(n_) + 1, 0);
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(n_));
        for (int v : entries_)
            if (++seen[static_cast<std::size_t>(v)] == j) out.push_back(v);
        return out;
    }

    friend bool operator==(const Multipermutation&, const Multipermutation&) = default;
    friend auto operator<=>(const Multipermutation&, const Multipermutation&) = default;

private:
    std::vector<int> entries_;
    int n_ = 0;
    int k_ = 1;
};

struct WordStatistics {
    int des = 0;
    int plat = 0;
    int wdes = 0;
    std::vector<int> descent_set;  // 1-based positions in [len-1]

    friend bool operator==(const WordStatistics&, const WordStatistics&) = default;
};

/// Descents, plateaus and weak descents. The final position is never a descent.
inline WordStatistics statistics(std::span<const int> w) {
    WordStatistics s;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) {
            ++s.des;
            s.descent_set.push_back(static_cast<int>(i) + 1);
        } else if (w[i] == w[i + 1]) {
            ++s.plat;
        }
    }
    s.wdes = s.des + s.plat;
    return s;
}

inline WordStatistics statistics(const Permutation& p) { return statistics(p.word()); }
inline WordStatistics statistics(const Multipermutation& w) { return statistics(w.word()); }

inline int des(std::span<const int> w) { return statistics(w).des; }
inline int des(const Permutation& p) { return statistics(p).des; }
inline int des(const Multipermutation& w) { return statistics(w).des; }

inline std::vector<int> descent_set(const Permutation& p) { return statistics(p).descent_set; }

// ---------------------------------------------------------------------------
// Textual form: a digit string when every entry is at most 9, otherwise a
// comma-separated list.

inline std::vector<int> parse_word(std::string_view text) {
    std::vector<int> out;
    if (text.empty()) return out;
    const bool commas = text.find(',') != std::string_view::npos;
    if (!commas) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c < '1' || c > '9') throw parse_error(i, std::string("expected digit 1-9, got '") + c + "'");
            out.push_back(c - '0');
        }
        return out;
    }
    std::size_t i = 0;
    while (true) {
        const std::size_t start = i;
        long value = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000) throw parse_error(start, "entry too large");
            ++i;
        }
        if (i == start) throw parse_error(i, "expected a positive integer");
        if (value == 0) throw parse_error(start, "entries must be positive");
        out.push_back(static_cast<int>(value));
        if (i == text.size()) break;
        if (text[i] != ',') throw parse_error(i, std::string("expected ',', got '") + text[i] + "'");
        ++i;
        if (i == text.size()) throw parse_error(i, "trailing ','");
    }
    return out;
}

inline std::string format_word(std::span<const int> w) {
    const bool small = std::all_of(w.begin(), w.end(), [](int v) { return v >= 1 && v <= 9; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (small) {
            s += static_cast<char>('0' + w[i]);
        } else {
            if (i) s += ',';
            s += std::to_string(w[i]);
        }
    }
    return s;
}

inline std::string format_word(const Permutation& p) { return format_word(p.word()); }
inline std::string format_word(const Multipermutation& w) { return format_word(w.word()); }

inline Permutation parse_permutation(std::string_view text) {
    try {
        return Permutation(parse_word(text));
    } catch (const domain_error& e) {
        throw parse_error(0, e.what());
    }
}

inline Multipermutation parse_multipermutation(std::string_view text, int k) {
    try {
        return Multipermutation(parse_word(text), k);
    } catch (const domain_error& e) {
        throw parse_error(0, e.what());
    }
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << format_word(p); }
inline std::ostream& operator<<(std::ostream& os, const Multipermutation& w) { return os << format_word(w); }

} // namespace canon
