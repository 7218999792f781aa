#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace heffter {

using Entry = std::int64_t;

// All sums go through this so silent wraparound is impossible.
inline Entry checked_add(Entry a, Entry b) {
    Entry r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("heffter: integer overflow in sum");
    return r;
}

// Canonical residue in [0, v).
inline Entry mod_canon(Entry x, Entry v) {
    Entry r = x % v;
    return r < 0 ? r + v : r;
}

inline Entry abs_entry(Entry a) {
    if (a == std::numeric_limits<Entry>::min())
        throw std::overflow_error("heffter: |entry| overflows");
    return a < 0 ? -a : a;
}

struct Cell {
    std::size_t row = 0;
    std::size_t col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// An m x n grid whose cells are either empty or hold a signed integer.
// Programmatic fills go through set(), which rejects 0; the grid parser may
// deposit any integer via set_unchecked() so that illegal entries surface in
// verification rather than as parse errors.
class PartialArray {
public:
    PartialArray(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("PartialArray: dimensions must be positive");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const std::optional<Entry>& at(std::size_t r, std::size_t c) const {
        return cells_[index(r, c)];
    }
    bool filled(std::size_t r, std::size_t c) const {
        return cells_[index(r, c)].has_value();
    }

    void set(std::size_t r, std::size_t c, Entry value) {
        if (value == 0)
            throw std::invalid_argument("PartialArray: 0 is not a legal entry");
        cells_[index(r, c)] = value;
    }
    void set_unchecked(std::size_t r, std::size_t c, Entry value) {
        cells_[index(r, c)] = value;
    }
    void clear(std::size_t r, std::size_t c) { cells_[index(r, c)].reset(); }

    std::size_t filled_count() const {
        std::size_t n = 0;
        for (const auto& cell : cells_)
            if (cell) ++n;
        return n;
    }

    void swap_rows(std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(cells_[index(r1, c)], cells_[index(r2, c)]);
    }
    void swap_cols(std::size_t c1, std::size_t c2) {
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap(cells_[index(r, c1)], cells_[index(r, c2)]);
    }

    friend bool operator==(const PartialArray&, const PartialArray&) = default;

private:
    std::size_t index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("PartialArray: cell index out of range");
        return r * cols_ + c;
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::optional<Entry>> cells_;
};

// The filled cells of one row (left to right) or one column (top to bottom),
// i.e. a line together with its natural ordering.
struct LineView {
    std::vector<Cell> coordinates;
    std::vector<Entry> values;
};

inline LineView row_line(const PartialArray& H, std::size_t r) {
    LineView L;
    for (std::size_t c = 0; c < H.cols(); ++c)
        if (const auto& e = H.at(r, c)) {
            L.coordinates.push_back({r, c});
            L.values.push_back(*e);
        }
    return L;
}

inline LineView col_line(const PartialArray& H, std::size_t c) {
    LineView L;
    for (std::size_t r = 0; r < H.rows(); ++r)
        if (const auto& e = H.at(r, c)) {
            L.coordinates.push_back({r, c});
            L.values.push_back(*e);
        }
    return L;
}

} // namespace heffter
