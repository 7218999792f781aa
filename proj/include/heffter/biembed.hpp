#pragma once

// Orderings of the filled cells of a square array, their composition as a
// permutation, and certification of the hypotheses under which a pair of
// orthogonal cycle decompositions embeds on an orientable surface: the array
// verifies, it is cyclically diagonal, the two orderings are compatible
// (their composition is one full cycle), and every line's ordering is simple
// at the relevant modulus.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/diagonal.hpp"
#include "heffter/verify.hpp"

namespace heffter {

// An ordering of the filled cells, one block per line; each block is read as
// a cyclic successor function within its line.
struct CellOrdering {
    std::vector<std::vector<Cell>> lines;

    std::vector<Cell> sequence() const {
        std::vector<Cell> out;
        for (const auto& block : lines) out.insert(out.end(), block.begin(), block.end());
        return out;
    }
};

// Rows left to right, top row first.
inline CellOrdering natural_row_ordering(const PartialArray& H) {
    CellOrdering w;
    for (std::size_t r = 0; r < H.rows(); ++r) {
        LineView L = row_line(H, r);
        if (!L.coordinates.empty()) w.lines.push_back(std::move(L.coordinates));
    }
    return w;
}

// Columns top to bottom, except the last `reversed_tail` columns, which run
// bottom to top.
inline CellOrdering column_ordering(const PartialArray& H, std::size_t reversed_tail = 0) {
    if (reversed_tail > H.cols())
        throw std::invalid_argument("column_ordering: cannot reverse more columns than exist");
    CellOrdering w;
    for (std::size_t c = 0; c < H.cols(); ++c) {
        LineView L = col_line(H, c);
        if (L.coordinates.empty()) continue;
        if (c >= H.cols() - reversed_tail)
            std::reverse(L.coordinates.begin(), L.coordinates.end());
        w.lines.push_back(std::move(L.coordinates));
    }
    return w;
}

struct CompositionResult {
    std::vector<std::size_t> cycle_lengths;  // ascending; sums to the cell count
    bool is_single_cycle = false;
    std::vector<std::vector<Cell>> cycles;   // each starts at its smallest cell
};

namespace detail {

inline std::map<Cell, Cell> successor_map(const CellOrdering& w, const char* who) {
    std::map<Cell, Cell> succ;
    for (const auto& block : w.lines) {
        if (block.empty()) throw std::invalid_argument(std::string(who) + ": empty line block");
        for (std::size_t i = 0; i < block.size(); ++i) {
            const bool fresh = succ.emplace(block[i], block[(i + 1) % block.size()]).second;
            if (!fresh)
                throw std::invalid_argument(std::string(who) + ": a cell appears twice");
        }
    }
    return succ;
}

}  // namespace detail

// Cycle structure of the permutation sending each filled cell to the column
// successor of its row successor. The two orderings must cover the same
// cells.
inline CompositionResult compose(const CellOrdering& row_order, const CellOrdering& col_order) {
    const std::map<Cell, Cell> row_succ = detail::successor_map(row_order, "compose(rows)");
    const std::map<Cell, Cell> col_succ = detail::successor_map(col_order, "compose(columns)");
    if (row_succ.size() != col_succ.size())
        throw std::invalid_argument("compose: orderings cover different cell counts");
    for (const auto& [cell, next] : row_succ) {
        (void)next;
        if (!col_succ.count(cell))
            throw std::invalid_argument("compose: orderings cover different cells");
    }

    CompositionResult res;
    std::set<Cell> unvisited;
    for (const auto& [cell, next] : row_succ) {
        (void)next;
        unvisited.insert(cell);
    }
    while (!unvisited.empty()) {
        const Cell start = *unvisited.begin();
        std::vector<Cell> cycle;
        Cell x = start;
        do {
            cycle.push_back(x);
            unvisited.erase(x);
            x = col_succ.at(row_succ.at(x));
        } while (!(x == start));
        res.cycle_lengths.push_back(cycle.size());
        res.cycles.push_back(std::move(cycle));
    }
    std::sort(res.cycle_lengths.begin(), res.cycle_lengths.end());
    res.is_single_cycle = res.cycles.size() == 1 && !res.cycles.front().empty();
    return res;
}

namespace detail {

inline DiagonalProfile standard_diagonal_profile(const PartialArray& H, const char* who) {
    if (H.rows() != H.cols()) throw std::invalid_argument(std::string(who) + ": array must be square");
    const auto prof = diagonal_profile(H);
    if (!prof) throw std::invalid_argument(std::string(who) + ": array is not cyclically diagonal");
    if (prof->r != 1)
        throw std::invalid_argument(std::string(who) +
                                    ": array must be in standard form (first diagonal filled)");
    return *prof;
}

}  // namespace detail

// Orderings for an odd number of filled diagonals with gcd(n, k-1) = 1:
// natural rows, columns natural except the last one reversed. Their
// composition is a single cycle through all filled cells.
inline std::pair<CellOrdering, CellOrdering> odd_diagonal_orderings(const PartialArray& H) {
    const DiagonalProfile prof = detail::standard_diagonal_profile(H, "odd_diagonal_orderings");
    const std::size_t n = H.rows(), k = prof.k;
    if (k % 2 == 0) throw std::invalid_argument("odd_diagonal_orderings: needs an odd diagonal count");
    if (n < k) throw std::invalid_argument("odd_diagonal_orderings: needs n >= k");
    if (std::gcd(n, k - 1) != 1)
        throw std::invalid_argument("odd_diagonal_orderings: needs gcd(n, k-1) = 1");
    return {natural_row_ordering(H), column_ordering(H, 1)};
}

// Orderings for exactly seven filled diagonals and odd n: natural rows,
// columns natural except the last four reversed.
inline std::pair<CellOrdering, CellOrdering> seven_diagonal_orderings(const PartialArray& H) {
    const DiagonalProfile prof = detail::standard_diagonal_profile(H, "seven_diagonal_orderings");
    const std::size_t n = H.rows();
    if (prof.k != 7) throw std::invalid_argument("seven_diagonal_orderings: needs exactly 7 filled diagonals");
    if (n % 2 == 0 || n < 7) throw std::invalid_argument("seven_diagonal_orderings: needs odd n >= 7");
    return {natural_row_ordering(H), column_ordering(H, 4)};
}

struct BiembedModulusReport {
    Entry v = 0;
    bool rows_simple = false;
    bool cols_simple = false;
    bool ok = false;  // every hypothesis holds at this modulus

    bool operator==(const BiembedModulusReport&) const = default;
};

struct BiembedReport {
    bool heffter = false;                      // array verifies as a Heffter array
    bool diagonal = false;                     // cyclically diagonal
    std::optional<DiagonalProfile> profile;    // as detected on the input
    std::string method;                        // "reverse-last-1", "reverse-last-4", or ""
    bool compatible = false;                   // composition is one full cycle
    std::optional<CompositionResult> composition;
    BiembedModulusReport complete;             // modulus 2nk+1
    BiembedModulusReport cocktail;             // modulus 2nk+2
};

namespace detail {

inline bool ordering_simple(const PartialArray& H, const CellOrdering& w, Entry v) {
    for (const auto& block : w.lines) {
        std::vector<Entry> values;
        values.reserve(block.size());
        for (const Cell& c : block) values.push_back(*H.at(c.row, c.col));
        if (!is_simple_ordering(values, v)) return false;
    }
    return true;
}

}  // namespace detail

// Reports whether the hypotheses for an orientable biembedding hold at each
// modulus: verified array, cyclic diagonal structure, an applicable ordering
// construction whose composition is a single cycle, and per-line simplicity
// of both orderings. Nothing is thrown for arrays that merely fail a
// hypothesis; the report carries the failure.
inline BiembedReport certify_biembedding(const PartialArray& H, std::size_t k) {
    BiembedReport rep;
    const VerificationReport ver = verify(H, k);
    rep.heffter = ver.classification != Classification::NotHeffter;
    rep.complete.v = ver.v_complete;
    rep.cocktail.v = ver.v_cocktail;

    rep.profile = diagonal_profile(H);
    rep.diagonal = rep.profile.has_value();
    if (!rep.diagonal) return rep;

    const PartialArray B = standard_form(H);
    const std::size_t n = B.rows(), kd = rep.profile->k;
    CellOrdering rows, cols;
    if (kd % 2 == 1 && n >= kd && std::gcd(n, kd - 1) == 1) {
        std::tie(rows, cols) = odd_diagonal_orderings(B);
        rep.method = "reverse-last-1";
    } else if (kd == 7 && n % 2 == 1 && n >= 7) {
        std::tie(rows, cols) = seven_diagonal_orderings(B);
        rep.method = "reverse-last-4";
    } else {
        return rep;  // no ordering construction applies
    }

    rep.composition = compose(rows, cols);
    rep.compatible = rep.composition->is_single_cycle;

    for (BiembedModulusReport* m : {&rep.complete, &rep.cocktail}) {
        m->rows_simple = detail::ordering_simple(B, rows, m->v);
        m->cols_simple = detail::ordering_simple(B, cols, m->v);
        m->ok = rep.heffter && rep.diagonal && rep.compatible && m->rows_simple && m->cols_simple;
    }
    return rep;
}

}  // namespace heffter
