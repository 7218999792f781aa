#pragma once

// Independent brute-force tools: exhaustive backtracking search for small
// Heffter arrays, permutation search for simple orderings of zero-sum sets,
// and a no-shortcuts orthogonality checker used as a reference oracle for the
// shift-reduced certifier.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/decomp.hpp"
#include "heffter/verify.hpp"

namespace heffter {

struct SearchBudget {
    std::uint64_t node_limit = 50'000'000;
    double time_limit_seconds = 60.0;
};

enum class SearchStatus { Found, ProvenAbsent, Unknown };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::ProvenAbsent: return "proven-absent";
        default: return "unknown";
    }
}

namespace detail {

class BudgetClock {
public:
    explicit BudgetClock(const SearchBudget& b)
        : limit_(b.node_limit),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(b.time_limit_seconds))) {
        if (b.node_limit == 0 || b.time_limit_seconds <= 0)
            throw std::invalid_argument("search budget: limits must be positive");
    }

    // Returns false once the budget is spent. Counts one node per call.
    bool tick() {
        if (++nodes_ > limit_) return false;
        if ((nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_) return false;
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t nodes_ = 0;
    std::uint64_t limit_;
    std::chrono::steady_clock::time_point deadline_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive search for an m x n array with h filled cells per row, k per
// column, entries with pairwise distinct absolute values from {1..nk}, and
// every line summing to zero.

struct HeffterSearchResult {
    SearchStatus status = SearchStatus::Unknown;
    std::optional<PartialArray> array;
    std::uint64_t nodes = 0;
};

namespace detail {

struct HeffterSearcher {
    std::size_t m, n, h, k;
    Entry N;  // largest magnitude
    BudgetClock clock;
    std::vector<char> pattern;        // m*n cell mask for the current pattern
    std::vector<Entry> value;         // 0 = unfilled
    std::vector<char> used;           // magnitude -> taken
    std::vector<Entry> row_sum, col_sum;
    std::vector<std::size_t> row_left, col_left;  // unfilled cells per line
    std::vector<Entry> magnitudes_desc;           // N..1 for the feasibility bound
    std::optional<PartialArray> found;
    bool budget_hit = false;

    HeffterSearcher(std::size_t m_, std::size_t n_, std::size_t h_, std::size_t k_,
                    const SearchBudget& b)
        : m(m_), n(n_), h(h_), k(k_), N(static_cast<Entry>(n_ * k_)), clock(b),
          pattern(m_ * n_, 0), value(m_ * n_, 0), used(static_cast<std::size_t>(N) + 1, 0),
          row_sum(m_, 0), col_sum(n_, 0), row_left(m_, 0), col_left(n_, 0) {
        for (Entry x = N; x >= 1; --x) magnitudes_desc.push_back(x);
    }

    bool out_of_budget() { return budget_hit; }

    // ---- pattern enumeration: row supports with exact column capacities ----

    std::vector<std::size_t> col_cap;  // remaining rows that may fill each column

    void search_patterns(std::size_t row) {
        if (found || budget_hit) return;
        if (!clock.tick()) { budget_hit = true; return; }
        if (row == m) {
            for (std::size_t c = 0; c < n; ++c)
                if (col_cap[c] != 0) return;  // column underfilled (unreachable with the prune)
            start_values();
            return;
        }
        std::vector<std::size_t> cols;
        choose_support(row, 0, cols);
    }

    void choose_support(std::size_t row, std::size_t from, std::vector<std::size_t>& cols) {
        if (found || budget_hit) return;
        if (cols.size() == h) {
            // Feasibility: the remaining rows must be able to exhaust every column.
            const std::size_t rows_left = m - row - 1;
            for (std::size_t c = 0; c < n; ++c)
                if (col_cap[c] > rows_left) return;
            for (std::size_t c : cols) pattern[row * n + c] = 1;
            search_patterns(row + 1);
            for (std::size_t c : cols) pattern[row * n + c] = 0;
            return;
        }
        const std::size_t need = h - cols.size();
        for (std::size_t c = from; c + need <= n; ++c) {
            if (col_cap[c] == 0) continue;
            --col_cap[c];
            cols.push_back(c);
            choose_support(row, c + 1, cols);
            cols.pop_back();
            ++col_cap[c];
            if (found || budget_hit) return;
        }
    }

    // ---- value assignment over one fixed pattern ----

    void start_values() {
        for (std::size_t r = 0; r < m; ++r) row_sum[r] = 0;
        for (std::size_t c = 0; c < n; ++c) col_sum[c] = 0;
        for (std::size_t r = 0; r < m; ++r)
            row_left[r] = static_cast<std::size_t>(
                std::count(pattern.begin() + r * n, pattern.begin() + (r + 1) * n, 1));
        for (std::size_t c = 0; c < n; ++c) {
            col_left[c] = 0;
            for (std::size_t r = 0; r < m; ++r) col_left[c] += pattern[r * n + c];
        }
        assign();
    }

    // Most-constrained unfilled cell: fewest cells left in its row or column.
    std::optional<std::size_t> pick_cell() const {
        std::optional<std::size_t> best;
        std::size_t best_score = ~std::size_t{0};
        for (std::size_t i = 0; i < m * n; ++i) {
            if (!pattern[i] || value[i] != 0) continue;
            const std::size_t score = std::min(row_left[i / n], col_left[i % n]);
            if (score < best_score) {
                best_score = score;
                best = i;
            }
        }
        return best;
    }

    bool line_feasible(Entry sum, std::size_t left) const {
        // |current sum| must be coverable by the `left` largest free magnitudes.
        Entry cap = 0;
        std::size_t taken = 0;
        for (Entry x : magnitudes_desc) {
            if (taken == left) break;
            if (!used[static_cast<std::size_t>(x)]) {
                cap = checked_add(cap, x);
                ++taken;
            }
        }
        const Entry a = sum < 0 ? -sum : sum;
        return a <= cap;
    }

    void place(std::size_t i, Entry val) {
        value[i] = val;
        used[static_cast<std::size_t>(abs_entry(val))] = 1;
        row_sum[i / n] += val;
        col_sum[i % n] += val;
        --row_left[i / n];
        --col_left[i % n];
    }

    void unplace(std::size_t i) {
        const Entry val = value[i];
        value[i] = 0;
        used[static_cast<std::size_t>(abs_entry(val))] = 0;
        row_sum[i / n] -= val;
        col_sum[i % n] -= val;
        ++row_left[i / n];
        ++col_left[i % n];
    }

    bool value_ok(Entry val) const {
        const Entry a = val < 0 ? -val : val;
        if (a < 1 || a > N || used[static_cast<std::size_t>(a)]) return false;
        if (val == -1) return false;  // global negation symmetry: magnitude 1 is placed as +1
        return true;
    }

    void assign() {
        if (found || budget_hit) return;
        if (!clock.tick()) { budget_hit = true; return; }
        const auto cell = pick_cell();
        if (!cell) {
            harvest();
            return;
        }
        const std::size_t i = *cell;
        const std::size_t r = i / n, c = i % n;
        const bool row_last = row_left[r] == 1;
        const bool col_last = col_left[c] == 1;
        if (row_last || col_last) {
            // Forced: the line must close to zero.
            const Entry forced = row_last ? -row_sum[r] : -col_sum[c];
            if (row_last && col_last && -row_sum[r] != -col_sum[c]) return;
            if (!value_ok(forced)) return;
            place(i, forced);
            if ((row_left[r] > 0 ? line_feasible(row_sum[r], row_left[r]) : row_sum[r] == 0) &&
                (col_left[c] > 0 ? line_feasible(col_sum[c], col_left[c]) : col_sum[c] == 0))
                assign();
            unplace(i);
            return;
        }
        for (Entry a = 1; a <= N; ++a) {
            if (used[static_cast<std::size_t>(a)]) continue;
            for (int s = 0; s < 2; ++s) {
                const Entry val = s == 0 ? a : -a;
                if (!value_ok(val)) continue;
                place(i, val);
                if (line_feasible(row_sum[r], row_left[r]) && line_feasible(col_sum[c], col_left[c]))
                    assign();
                unplace(i);
                if (found || budget_hit) return;
            }
        }
    }

    void harvest() {
        PartialArray H(m, n);
        for (std::size_t i = 0; i < m * n; ++i)
            if (pattern[i]) H.set(i / n, i % n, value[i]);
        const VerificationReport rep = verify(H, k);
        if (!rep.support_ok || !rep.counts_ok || !rep.zero_sums_ok)
            throw InternalInconsistencyError("find_heffter: harvested array fails verification");
        found = std::move(H);
    }
};

}  // namespace detail

inline HeffterSearchResult find_heffter(std::size_t m, std::size_t n, std::size_t h, std::size_t k,
                                        const SearchBudget& budget = {}) {
    if (m == 0 || n == 0 || h < 3 || k < 3)
        throw std::invalid_argument("find_heffter: need m, n >= 1 and h, k >= 3");
    if (m * h != n * k)
        throw std::invalid_argument("find_heffter: total filled cells must agree (m*h == n*k)");
    HeffterSearchResult res;
    if (h > n || k > m) {
        // No cell pattern can give h filled cells in a row of n (or k in a
        // column of m); vacuously exhausted.
        res.status = SearchStatus::ProvenAbsent;
        return res;
    }
    detail::HeffterSearcher s(m, n, h, k, budget);
    s.col_cap.assign(n, k);
    s.search_patterns(0);
    res.nodes = s.clock.nodes();
    if (s.found) {
        res.status = SearchStatus::Found;
        res.array = std::move(s.found);
    } else if (s.budget_hit) {
        res.status = SearchStatus::Unknown;
    } else {
        res.status = SearchStatus::ProvenAbsent;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Permutation search for an ordering of A whose partial sums are pairwise
// distinct modulo v.

struct OrderingSearchResult {
    SearchStatus status = SearchStatus::Unknown;
    std::optional<std::vector<Entry>> ordering;  // permutation of the input values
    std::uint64_t nodes = 0;
    bool zero_sum = false;       // whether sum(A) = 0 (mod v)
    bool no_pair = false;        // whether no {x, -x} pair occurs modulo v
    bool no_zero = false;        // whether no element is 0 modulo v
};

namespace detail {

struct OrderingSearcher {
    Entry v;
    BudgetClock clock;
    std::vector<Entry> elems;  // original representatives, sorted by residue
    std::vector<char> taken;
    std::vector<Entry> out;
    std::set<Entry> sums_seen;
    std::optional<std::vector<Entry>> found;
    bool budget_hit = false;

    OrderingSearcher(std::vector<Entry> a, Entry v_, const SearchBudget& b)
        : v(v_), clock(b), elems(std::move(a)), taken(elems.size(), 0) {
        std::stable_sort(elems.begin(), elems.end(),
                         [&](Entry x, Entry y) { return mod_canon(x, v) < mod_canon(y, v); });
    }

    void rec(Entry sum) {
        if (found || budget_hit) return;
        if (!clock.tick()) { budget_hit = true; return; }
        if (out.size() == elems.size()) {
            found = out;
            return;
        }
        Entry last_tried = -1;
        bool have_last = false;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (taken[i]) continue;
            const Entry r = mod_canon(elems[i], v);
            if (have_last && r == last_tried) continue;  // equal residues branch identically
            last_tried = r;
            have_last = true;
            const Entry s = mod_canon(sum + r, v);
            if (sums_seen.count(s)) continue;
            taken[i] = 1;
            out.push_back(elems[i]);
            sums_seen.insert(s);
            rec(s);
            sums_seen.erase(s);
            out.pop_back();
            taken[i] = 0;
            if (found || budget_hit) return;
        }
    }
};

}  // namespace detail

inline OrderingSearchResult find_simple_ordering(const std::vector<Entry>& A, Entry v,
                                                 const SearchBudget& budget = {}) {
    if (A.empty()) throw std::invalid_argument("find_simple_ordering: empty set");
    if (v < 2) throw std::invalid_argument("find_simple_ordering: modulus must be >= 2");
    OrderingSearchResult res;
    Entry total = 0;
    res.no_zero = true;
    std::set<Entry> residues;
    for (Entry x : A) {
        total = checked_add(total, x);
        if (mod_canon(x, v) == 0) res.no_zero = false;
        residues.insert(mod_canon(x, v));
    }
    res.zero_sum = mod_canon(total, v) == 0;
    res.no_pair = true;
    for (Entry r : residues)
        if (r != 0 && residues.count(mod_canon(-r, v))) {
            // Covers r = v/2 as well: such an element is its own negation.
            res.no_pair = false;
            break;
        }

    detail::OrderingSearcher s(A, v, budget);
    s.rec(0);
    res.nodes = s.clock.nodes();
    if (s.found) {
        if (!is_simple_ordering(*s.found, v))
            throw InternalInconsistencyError("find_simple_ordering: witness fails the check");
        res.status = SearchStatus::Found;
        res.ordering = std::move(s.found);
    } else if (s.budget_hit) {
        res.status = SearchStatus::Unknown;
    } else {
        res.status = SearchStatus::ProvenAbsent;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Reference orthogonality check: develop both sets fully and compare all
// cycle pairs edge by edge. No shift reduction; quadratic in v.

inline bool naive_orthogonality(const BaseCycleSet& B, const BaseCycleSet& Bp, Entry max_v = 500) {
    require_coherent(B, "naive_orthogonality");
    require_coherent(Bp, "naive_orthogonality");
    if (B.v != Bp.v) throw std::invalid_argument("naive_orthogonality: moduli differ");
    if (B.kind != Bp.kind) throw std::invalid_argument("naive_orthogonality: graph kinds differ");
    if (B.v > max_v)
        throw std::invalid_argument("naive_orthogonality: modulus exceeds the size guard");

    auto develop_all = [](const BaseCycleSet& S) {
        std::vector<std::vector<Edge>> out;
        out.reserve(S.cycles.size() * static_cast<std::size_t>(S.v));
        for (const ModCycle& C : S.cycles)
            for (Entry g = 0; g < S.v; ++g) {
                std::vector<Edge> e = cycle_edges(develop(C, g));
                std::sort(e.begin(), e.end());
                out.push_back(std::move(e));
            }
        return out;
    };
    const auto full_b = develop_all(B);
    const auto full_p = develop_all(Bp);
    for (const auto& eb : full_b)
        for (const auto& ep : full_p) {
            std::size_t shared = 0;
            auto it = eb.begin();
            auto jt = ep.begin();
            while (it != eb.end() && jt != ep.end()) {
                if (*it < *jt) ++it;
                else if (*jt < *it) ++jt;
                else { ++shared; ++it; ++jt; }
            }
            if (shared > 1) return false;
        }
    return true;
}

}  // namespace heffter
