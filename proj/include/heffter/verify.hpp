#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "array.hpp"

namespace heffter {

// Raised when a certified invariant fails after its gate has passed: always an
// implementation bug, never a usage error.
class InternalInconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct PartialSumSeq {
    std::vector<Entry> sums;            // exact cumulative sums s_1..s_k
    std::optional<Entry> modulus;       // set when sums were reduced
};

inline PartialSumSeq partial_sums(const std::vector<Entry>& values,
                                  std::optional<Entry> modulus = std::nullopt) {
    if (values.empty())
        throw std::invalid_argument("partial_sums: empty sequence");
    PartialSumSeq seq;
    seq.modulus = modulus;
    seq.sums.reserve(values.size());
    Entry s = 0;
    for (Entry a : values) {
        s = checked_add(s, a);
        seq.sums.push_back(modulus ? mod_canon(s, *modulus) : s);
    }
    return seq;
}

// An ordering is simple mod v when its partial sums are pairwise distinct mod v
// (equivalently: no proper nonempty consecutive block sums to 0 mod v).
inline bool is_simple_ordering(const std::vector<Entry>& values, Entry v) {
    if (values.empty())
        throw std::invalid_argument("is_simple_ordering: empty sequence");
    if (v < 2)
        throw std::invalid_argument("is_simple_ordering: modulus must be >= 2");
    std::vector<Entry> residues;
    residues.reserve(values.size());
    Entry s = 0;
    for (Entry a : values) {
        s = checked_add(s, a);
        residues.push_back(mod_canon(s, v));
    }
    std::sort(residues.begin(), residues.end());
    return std::adjacent_find(residues.begin(), residues.end()) == residues.end();
}

inline bool line_sum_zero(const LineView& L, std::optional<Entry> modulus = std::nullopt) {
    if (L.values.empty())
        throw std::invalid_argument("line_sum_zero: empty line");
    Entry s = 0;
    for (Entry a : L.values) s = checked_add(s, a);
    return modulus ? mod_canon(s, *modulus) == 0 : s == 0;
}

// True iff the absolute values of the filled entries are exactly {1..cols*k},
// each once. Illegal entries (0, out of range, duplicated magnitude) fail here.
inline bool check_support(const PartialArray& H, std::size_t k) {
    const std::size_t N = H.cols() * k;
    std::vector<char> seen(N + 1, 0);
    std::size_t count = 0;
    for (std::size_t r = 0; r < H.rows(); ++r)
        for (std::size_t c = 0; c < H.cols(); ++c)
            if (const auto& e = H.at(r, c)) {
                if (*e == 0 || *e == std::numeric_limits<Entry>::min()) return false;
                Entry m = *e < 0 ? -*e : *e;
                if (static_cast<std::size_t>(m) > N || seen[m]) return false;
                seen[m] = 1;
                ++count;
            }
    return count == N;
}

// True iff every column holds exactly k filled cells and all rows hold a
// common number of filled cells (h; equal to k for square arrays).
inline bool check_counts(const PartialArray& H, std::size_t k) {
    std::size_t h = row_line(H, 0).values.size();
    for (std::size_t r = 0; r < H.rows(); ++r)
        if (row_line(H, r).values.size() != h) return false;
    for (std::size_t c = 0; c < H.cols(); ++c)
        if (col_line(H, c).values.size() != k) return false;
    return h * H.rows() == k * H.cols();
}

enum class Classification { NotHeffter, Heffter, GloballySimple, GloballySimpleStar };

inline const char* to_string(Classification c) {
    switch (c) {
        case Classification::NotHeffter: return "not-heffter";
        case Classification::Heffter: return "heffter";
        case Classification::GloballySimple: return "globally-simple";
        case Classification::GloballySimpleStar: return "globally-simple-star";
    }
    return "?";
}

struct LineSimplicity {
    std::vector<bool> rows;
    std::vector<bool> cols;
    bool all() const {
        auto ok = [](const std::vector<bool>& f) {
            return std::all_of(f.begin(), f.end(), [](bool b) { return b; });
        };
        return ok(rows) && ok(cols);
    }
};

struct VerificationReport {
    bool support_ok = false;
    bool counts_ok = false;
    std::size_t observed_row_fill = 0;  // h (0 when rows disagree)
    std::size_t observed_col_fill = 0;  // k (0 when columns disagree)
    bool zero_sums_ok = false;
    std::vector<bool> row_sum_ok;
    std::vector<bool> col_sum_ok;
    Entry v_complete = 0;  // 2N+1
    Entry v_cocktail = 0;  // 2N+2
    std::map<Entry, LineSimplicity> simple_mod;
    Classification classification = Classification::NotHeffter;
};

// Checks every defining property of a (possibly rectangular) Heffter array
// under the natural orderings, then the per-line simplicity at both moduli.
// Never throws on bad arrays: all failures land in the report.
inline VerificationReport verify(const PartialArray& H, std::size_t k) {
    VerificationReport rep;
    const Entry N = static_cast<Entry>(H.cols() * k);
    rep.v_complete = 2 * N + 1;
    rep.v_cocktail = 2 * N + 2;

    rep.support_ok = check_support(H, k);
    rep.counts_ok = check_counts(H, k);
    {
        std::size_t h0 = row_line(H, 0).values.size();
        bool rows_uniform = true;
        for (std::size_t r = 0; r < H.rows(); ++r)
            rows_uniform = rows_uniform && row_line(H, r).values.size() == h0;
        rep.observed_row_fill = rows_uniform ? h0 : 0;
        std::size_t k0 = col_line(H, 0).values.size();
        bool cols_uniform = true;
        for (std::size_t c = 0; c < H.cols(); ++c)
            cols_uniform = cols_uniform && col_line(H, c).values.size() == k0;
        rep.observed_col_fill = cols_uniform ? k0 : 0;
    }

    std::vector<LineView> rows, cols;
    for (std::size_t r = 0; r < H.rows(); ++r) rows.push_back(row_line(H, r));
    for (std::size_t c = 0; c < H.cols(); ++c) cols.push_back(col_line(H, c));

    auto sum_ok = [](const LineView& L) {
        return L.values.empty() ? true : line_sum_zero(L);
    };
    rep.zero_sums_ok = true;
    for (const auto& L : rows) {
        rep.row_sum_ok.push_back(sum_ok(L));
        rep.zero_sums_ok = rep.zero_sums_ok && rep.row_sum_ok.back();
    }
    for (const auto& L : cols) {
        rep.col_sum_ok.push_back(sum_ok(L));
        rep.zero_sums_ok = rep.zero_sums_ok && rep.col_sum_ok.back();
    }

    for (Entry v : {rep.v_complete, rep.v_cocktail}) {
        LineSimplicity ls;
        for (const auto& L : rows)
            ls.rows.push_back(L.values.empty() ? true : is_simple_ordering(L.values, v));
        for (const auto& L : cols)
            ls.cols.push_back(L.values.empty() ? true : is_simple_ordering(L.values, v));
        rep.simple_mod.emplace(v, std::move(ls));
    }

    if (!(rep.support_ok && rep.counts_ok && rep.zero_sums_ok))
        rep.classification = Classification::NotHeffter;
    else if (!rep.simple_mod.at(rep.v_complete).all())
        rep.classification = Classification::Heffter;
    else if (!rep.simple_mod.at(rep.v_cocktail).all())
        rep.classification = Classification::GloballySimple;
    else
        rep.classification = Classification::GloballySimpleStar;
    return rep;
}

} // namespace heffter
