#pragma once

#include <heffter/array.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace heffter {

// A square array is cyclically k-diagonal when its filled cells are exactly
// the k cyclically consecutive diagonals D_r, D_{r+1}, ..., D_{r+k-1}, where
// D_s (1-based) holds the cells (i,j) with j - i == s - 1 (mod n).
struct DiagonalProfile {
    std::size_t k = 0;  // number of filled diagonals
    std::size_t r = 0;  // 1-based index of the first filled diagonal
    friend bool operator==(const DiagonalProfile&, const DiagonalProfile&) = default;
};

// Detects cyclic k-diagonal structure. Returns nullopt when the filled cells
// are not exactly a consecutive cyclic run of full diagonals. A fully filled
// array reports r = 1 by convention.
inline std::optional<DiagonalProfile> diagonal_profile(const PartialArray& H) {
    if (H.rows() != H.cols()) return std::nullopt;
    const std::size_t n = H.rows();

    // filled_on[d] counts filled cells on diagonal offset d = (j - i) mod n.
    std::vector<std::size_t> filled_on(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (H.filled(i, j)) ++filled_on[(j + n - i) % n];

    std::size_t k = 0;
    for (std::size_t d = 0; d < n; ++d) {
        if (filled_on[d] == n) ++k;
        else if (filled_on[d] != 0) return std::nullopt;  // partially filled diagonal
    }
    if (k == 0) return std::nullopt;
    if (k == n) return DiagonalProfile{n, 1};

    // The run of full diagonals must be cyclically consecutive; its start is
    // the unique full diagonal preceded by an empty one.
    std::optional<std::size_t> start;
    for (std::size_t d = 0; d < n; ++d) {
        if (filled_on[d] == n && filled_on[(d + n - 1) % n] == 0) {
            if (start) return std::nullopt;  // more than one run
            start = d;
        }
    }
    if (!start) return std::nullopt;
    for (std::size_t s = 0; s < k; ++s)
        if (filled_on[(*start + s) % n] != n) return std::nullopt;
    return DiagonalProfile{k, *start + 1};
}

// Cyclic row relabeling b_{i,j} = a_{i-r+1,j} (1-based) moving the filled
// diagonals to D_1..D_k. Rows are permuted as wholes; entries are untouched.
inline PartialArray standard_form(const PartialArray& H) {
    auto prof = diagonal_profile(H);
    if (!prof)
        throw std::invalid_argument("standard_form: array is not cyclically diagonal");
    const std::size_t n = H.rows();
    const std::size_t shift = prof->r - 1;  // 0-based row displacement
    PartialArray B(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = (i + n - shift) % n;
        for (std::size_t j = 0; j < n; ++j)
            if (const auto& e = H.at(src, j)) B.set_unchecked(i, j, *e);
    }
    return B;
}

} // namespace heffter
