#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace canon {

namespace detail {

inline int sign(int x) { return (x > 0) - (x < 0); }

inline bool extend_occurrence(std::span<const int> w, std::span<const int> p, std::vector<std::size_t>& chosen,
                              std::size_t from) {
    const std::size_t r = chosen.size();
    if (r == p.size()) return true;
    const std::size_t remaining = p.size() - r;
    for (std::size_t i = from; i + remaining <= w.size(); ++i) {
        bool ok = true;
        for (std::size_t s = 0; s < r && ok; ++s)
            ok = sign(w[i] - w[chosen[s]]) == sign(p[r] - p[s]);
        if (!ok) continue;
        chosen.push_back(i);
        if (extend_occurrence(w, p, chosen, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace detail

/// True iff some subsequence of w is order-isomorphic to p: equal pattern
/// letters map to equal entries and distinct letters keep their strict order.
inline bool pattern_occurs(std::span<const int> w, std::span<const int> p) {
    if (p.empty()) return true;
    std::vector<std::size_t> chosen;
    chosen.reserve(p.size());
    return detail::extend_occurrence(w, p, chosen, 0);
}

inline bool pattern_occurs(std::span<const int> w, std::initializer_list<int> p) {
    return pattern_occurs(w, std::span<const int>(p.begin(), p.size()));
}

} // namespace canon
