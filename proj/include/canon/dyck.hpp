#pragma once

#include "canon/counting.hpp"
#include "canon/errors.hpp"

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace canon {

enum class Step : char { E = 'E', N = 'N' };

/// Lattice point in the n x n grid; origin at the lower-left corner.
struct Point {
    int x = 0;
    int y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Unit cell addressed by its lower-left corner: column x, row y (0-based).
using Cell = Point;

/// Path from (0,0) to (n,n) with unit E and N steps, weakly below y = x.
class DyckPath {
public:
    DyckPath() = default;

    explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
        int e = 0, nn = 0;
        for (Step s : steps_) {
            (s == Step::E ? e : nn)++;
            if (nn > e) throw domain_error("path goes above the diagonal");
        }
        if (e != nn) throw domain_error("path does not end on the diagonal");
    }

    /// (EN)^n
    static DyckPath zigzag(int n) {
        std::vector<Step> s;
        for (int i = 0; i < n; ++i) {
            s.push_back(Step::E);
            s.push_back(Step::N);
        }
        return DyckPath(std::move(s));
    }

    /// E^n N^n
    static DyckPath tent(int n) {
        std::vector<Step> s(static_cast<std::size_t>(n), Step::E);
        s.insert(s.end(), static_cast<std::size_t>(n), Step::N);
        return DyckPath(std::move(s));
    }

    int n() const noexcept { return static_cast<int>(steps_.size() / 2); }
    std::size_t length() const noexcept { return steps_.size(); }
    Step operator[](std::size_t i) const { return steps_[i]; }
    const std::vector<Step>& steps() const noexcept { return steps_; }

    /// heights()[c] is the y-coordinate of the E step in column c.
    std::vector<int> heights() const {
        std::vector<int> h;
        h.reserve(static_cast<std::size_t>(n()));
        int y = 0;
        for (Step s : steps_) {
            if (s == Step::E) h.push_back(y);
            else ++y;
        }
        return h;
    }

    /// Inverse of heights(); h must be nondecreasing with h[c] <= c.
    static DyckPath from_heights(const std::vector<int>& h) {
        std::vector<Step> s;
        const int n = static_cast<int>(h.size());
        s.reserve(2 * h.size());
        int y = 0;
        for (int c = 0; c < n; ++c) {
            for (; y < h[static_cast<std::size_t>(c)]; ++y) s.push_back(Step::N);
            s.push_back(Step::E);
        }
        for (; y < n; ++y) s.push_back(Step::N);
        return DyckPath(std::move(s));
    }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

private:
    std::vector<Step> steps_;
};

inline std::string format_path(const DyckPath& d) {
    std::string s;
    s.reserve(d.length());
    for (Step st : d.steps()) s += static_cast<char>(st);
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const DyckPath& d) { return os << format_path(d); }

inline DyckPath parse_path(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    int e = 0, nn = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == 'E') {
            ++e;
            steps.push_back(Step::E);
        } else if (c == 'N') {
            if (++nn > e) throw parse_error(i, "path goes above the diagonal");
            steps.push_back(Step::N);
        } else {
            throw parse_error(i, std::string("expected 'E' or 'N', got '") + c + "'");
        }
    }
    if (e != nn) throw parse_error(text.size(), "path does not end on the diagonal");
    return DyckPath(std::move(steps));
}

struct PeakStats {
    int pea = 0;
    int lpea = 0;
    int hpea = 0;
    std::vector<Point> peak_corners;    // vertex between the E and N of each peak
    std::vector<Point> valley_corners;  // vertex between the N and E of each valley
};

inline PeakStats peak_stats(const DyckPath& d) {
    PeakStats ps;
    int x = 0, y = 0;
    const auto& s = d.steps();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == Step::E) ++x;
        else ++y;
        if (i + 1 == s.size()) break;
        if (s[i] == Step::E && s[i + 1] == Step::N) {
            ps.peak_corners.push_back({x, y});
            ++ps.pea;
            if (x == y + 1) ++ps.lpea;
            else ++ps.hpea;
        } else if (s[i] == Step::N && s[i + 1] == Step::E) {
            ps.valley_corners.push_back({x, y});
        }
    }
    return ps;
}

/// Cell bounded by the two steps of the peak with the given corner.
inline Cell peak_cell(Point corner) { return {corner.x - 1, corner.y}; }
/// Cell bounded by the two steps of the valley with the given corner.
inline Cell valley_cell(Point corner) { return {corner.x, corner.y - 1}; }

/// The path whose peak corners are exactly `corners` (sorted by x, with
/// strictly increasing coordinates, first y = 0 and last x = n).
inline DyckPath path_from_peak_corners(int n, const std::vector<Point>& corners) {
    std::vector<Step> s;
    s.reserve(2 * static_cast<std::size_t>(n));
    int x = 0;
    for (std::size_t i = 0; i < corners.size(); ++i) {
        const int next_y = i + 1 < corners.size() ? corners[i + 1].y : n;
        for (; x < corners[i].x; ++x) s.push_back(Step::E);
        for (int y = corners[i].y; y < next_y; ++y) s.push_back(Step::N);
    }
    return DyckPath(std::move(s));
}

/// The path whose valley corners are exactly `corners` (sorted, strictly increasing).
inline DyckPath path_from_valley_corners(int n, const std::vector<Point>& corners) {
    std::vector<Step> s;
    s.reserve(2 * static_cast<std::size_t>(n));
    int x = 0, y = 0;
    for (const Point& p : corners) {
        for (; x < p.x; ++x) s.push_back(Step::E);
        for (; y < p.y; ++y) s.push_back(Step::N);
    }
    for (; x < n; ++x) s.push_back(Step::E);
    for (; y < n; ++y) s.push_back(Step::N);
    return DyckPath(std::move(s));
}

inline bigint count_dyck(int n) { return catalan(n); }

namespace detail {

template <class F>
void dyck_dfs(int n, std::vector<Step>& buf, int e, int nn, F& f) {
    if (nn == n) {
        f(DyckPath(buf));
        return;
    }
    if (e < n) {
        buf.push_back(Step::E);
        dyck_dfs(n, buf, e + 1, nn, f);
        buf.pop_back();
    }
    if (nn < e) {
        buf.push_back(Step::N);
        dyck_dfs(n, buf, e, nn + 1, f);
        buf.pop_back();
    }
}

} // namespace detail

/// Visits every path in D_n in lexicographic order of the step word (E < N).
template <class F>
void for_each_dyck(int n, F&& f, std::uint64_t cap = default_cap) {
    check_cap(saturate_u64(count_dyck(n)), cap);
    std::vector<Step> buf;
    buf.reserve(2 * static_cast<std::size_t>(n));
    detail::dyck_dfs(n, buf, 0, 0, f);
}

inline std::vector<DyckPath> all_dyck(int n, std::uint64_t cap = default_cap) {
    std::vector<DyckPath> out;
    for_each_dyck(n, [&](const DyckPath& d) { out.push_back(d); }, cap);
    return out;
}

} // namespace canon
