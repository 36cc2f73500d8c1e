#pragma once

#include "canon/dyck.hpp"
#include "canon/errors.hpp"
#include "canon/word.hpp"

#include <string>
#include <vector>

namespace canon {

enum class Notch : char { none, upper_left, lower_right };

/// The n x n grid with columns (left to right) and rows (bottom to top) both
/// labelled sigma_1..sigma_n, red lines at the descents of sigma, and a notch
/// in every cell strictly below the diagonal recording how its row and column
/// labels compare.
class DecoratedGrid {
public:
    explicit DecoratedGrid(Permutation sigma) : sigma_(std::move(sigma)) {
        const int n = sigma_.size();
        red_.assign(static_cast<std::size_t>(n) + 1, false);
        for (int i : descent_set(sigma_)) {
            red_[static_cast<std::size_t>(i)] = true;
            red_lines_.push_back(i);
        }
        notches_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Notch::none);
        for (int col = 0; col < n; ++col) {
            for (int row = 0; row < col; ++row) {
                const int r = sigma_[static_cast<std::size_t>(row)];
                const int c = sigma_[static_cast<std::size_t>(col)];
                notches_[index({col, row})] = r > c ? Notch::upper_left : Notch::lower_right;
            }
        }
    }

    int n() const noexcept { return sigma_.size(); }
    const Permutation& sigma() const noexcept { return sigma_; }

    int column_label(int col) const { return sigma_[static_cast<std::size_t>(col)]; }
    int row_label(int row) const { return sigma_[static_cast<std::size_t>(row)]; }

    /// Coordinates i of the red lines x = i (vertical) and y = i (horizontal).
    const std::vector<int>& vertical_red_lines() const noexcept { return red_lines_; }
    const std::vector<int>& horizontal_red_lines() const noexcept { return red_lines_; }
    bool red_at(int coordinate) const {
        return coordinate >= 0 && coordinate <= n() && red_[static_cast<std::size_t>(coordinate)];
    }

    /// Notch of the cell with lower-left corner (col, row); none on or above the diagonal.
    Notch notch(Cell c) const {
        if (c.x < 0 || c.y < 0 || c.x >= n() || c.y >= n()) return Notch::none;
        return notches_[index(c)];
    }

private:
    std::size_t index(Cell c) const {
        return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(n()) + static_cast<std::size_t>(c.x);
    }

    Permutation sigma_;
    std::vector<bool> red_;
    std::vector<int> red_lines_;
    std::vector<Notch> notches_;
};

inline DecoratedGrid grid_of(const Permutation& sigma) { return DecoratedGrid(sigma); }

/// Number of double-steps crossing red lines plus corners bending around notches.
inline int des_sigma(const DyckPath& d, const DecoratedGrid& g) {
    if (d.n() != g.n())
        throw domain_error("size mismatch: path n = " + std::to_string(d.n()) + ", grid n = " + std::to_string(g.n()));
    const auto& s = d.steps();
    int count = 0;
    int x = 0, y = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == Step::E) ++x;
        else ++y;
        const Step a = s[i], b = s[i + 1];
        if (a == Step::E && b == Step::E) {
            count += g.red_at(x);
        } else if (a == Step::N && b == Step::N) {
            count += g.red_at(y);
        } else if (a == Step::E) {
            count += g.notch({x - 1, y}) == Notch::lower_right;
        } else {
            count += g.notch({x, y - 1}) == Notch::upper_left;
        }
    }
    return count;
}

inline int des_sigma(const DyckPath& d, const Permutation& sigma) { return des_sigma(d, grid_of(sigma)); }

} // namespace canon
