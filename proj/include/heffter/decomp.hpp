#pragma once

// Base cycles from array lines, difference lists, and certification of cyclic
// cycle decompositions of K_v and of K_{2t} minus a perfect matching, plus
// orthogonality certification for pairs of such decompositions.

#include <algorithm>
#include <cstddef>
#include <future>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/verify.hpp"

namespace heffter {

// Raised when a line's running sums collide modulo v, so its partial sums
// cannot serve as the vertices of a cycle.
class NotSimpleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A k-cycle on vertices in Z_v. Vertices are stored as canonical residues in
// [0, v) and are pairwise distinct; k >= 3.
struct ModCycle {
    Entry v = 0;
    std::vector<Entry> vertices;

    std::size_t size() const { return vertices.size(); }
    bool operator==(const ModCycle&) const = default;
};

// Validating factory: canonicalizes arbitrary representatives and enforces
// the cycle invariants.
inline ModCycle mod_cycle(const std::vector<Entry>& vertices, Entry v) {
    if (v < 3) throw std::invalid_argument("mod_cycle: modulus must be at least 3");
    if (vertices.size() < 3) throw std::invalid_argument("mod_cycle: a cycle needs at least 3 vertices");
    ModCycle C;
    C.v = v;
    C.vertices.reserve(vertices.size());
    for (Entry x : vertices) C.vertices.push_back(mod_canon(x, v));
    std::vector<Entry> sorted = C.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("mod_cycle: vertices must be pairwise distinct modulo v");
    return C;
}

// The vertices of the cycle induced by a line: its partial sums modulo v.
// The line must sum to 0 modulo v (so the last vertex is 0) and its running
// sums must be pairwise distinct modulo v.
inline ModCycle line_to_cycle(const LineView& L, Entry v) {
    if (v < 3) throw std::invalid_argument("line_to_cycle: modulus must be at least 3");
    if (L.values.size() < 3)
        throw std::invalid_argument("line_to_cycle: a line of fewer than 3 entries gives no cycle");
    PartialSumSeq ps = partial_sums(L.values, v);
    if (ps.sums.back() != 0)
        throw std::invalid_argument("line_to_cycle: line does not sum to 0 modulo v");
    std::vector<Entry> sorted = ps.sums;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw NotSimpleError("line_to_cycle: partial sums collide modulo v; the ordering is not simple");
    ModCycle C;
    C.v = v;
    C.vertices = std::move(ps.sums);
    return C;
}

// Multiset of nonzero residues modulo v, counted exactly.
struct DiffList {
    Entry v = 0;
    std::map<Entry, std::size_t> counts;  // canonical nonzero residue -> multiplicity

    bool operator==(const DiffList&) const = default;
};

// The 2k signed consecutive differences of a cycle, indices cyclic.
inline DiffList delta_cycle(const ModCycle& C) {
    DiffList d;
    d.v = C.v;
    const std::size_t k = C.vertices.size();
    for (std::size_t h = 0; h < k; ++h) {
        const Entry step = mod_canon(C.vertices[(h + 1) % k] - C.vertices[h], C.v);
        ++d.counts[step];
        ++d.counts[mod_canon(-step, C.v)];
    }
    return d;
}

enum class GraphKind { Complete, CocktailParty };

inline const char* to_string(GraphKind g) {
    return g == GraphKind::Complete ? "complete" : "cocktail";
}

// A set of cycles sharing one modulus, proposed as orbit representatives of a
// cyclic decomposition of the named graph on Z_v.
struct BaseCycleSet {
    GraphKind kind = GraphKind::Complete;
    Entry v = 0;
    std::vector<ModCycle> cycles;
};

inline void require_coherent(const BaseCycleSet& B, const char* who) {
    if (B.v < 3) throw std::invalid_argument(std::string(who) + ": modulus must be at least 3");
    if (B.kind == GraphKind::CocktailParty && B.v % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": cocktail-party order must be even");
    for (const ModCycle& C : B.cycles)
        if (C.v != B.v) throw std::invalid_argument(std::string(who) + ": cycles must share the set's modulus");
}

// One residue whose observed multiplicity in the combined difference list
// differs from the required multiplicity.
struct MultisetMismatch {
    Entry residue = 0;
    std::size_t observed = 0;
    std::size_t required = 0;

    bool operator==(const MultisetMismatch&) const = default;
};

struct BaseCycleCertificate {
    bool ok = false;
    std::vector<MultisetMismatch> mismatches;  // empty iff ok
};

// True iff the union-with-multiplicity of all difference lists covers every
// required residue exactly once: Z_v minus {0} for the complete graph, and
// additionally minus {v/2} (the matching's difference) for the cocktail party
// graph.
inline BaseCycleCertificate certify_base_cycles(const BaseCycleSet& B) {
    require_coherent(B, "certify_base_cycles");
    std::map<Entry, std::size_t> observed;
    for (const ModCycle& C : B.cycles)
        for (const auto& [r, c] : delta_cycle(C).counts) observed[r] += c;
    BaseCycleCertificate cert;
    const Entry half = B.v / 2;
    for (Entry r = 1; r < B.v; ++r) {
        const std::size_t required = (B.kind == GraphKind::CocktailParty && r == half) ? 0 : 1;
        const auto it = observed.find(r);
        const std::size_t got = it == observed.end() ? 0 : it->second;
        if (got != required) cert.mismatches.push_back({r, got, required});
    }
    cert.ok = cert.mismatches.empty();
    return cert;
}

// Translate every vertex by g modulo v.
inline ModCycle develop(const ModCycle& C, Entry g) {
    ModCycle D;
    D.v = C.v;
    D.vertices.reserve(C.vertices.size());
    for (Entry x : C.vertices) D.vertices.push_back(mod_canon(x + g, C.v));
    return D;
}

// Unordered pair of distinct residues, stored as (min, max).
struct Edge {
    Entry a = 0;
    Entry b = 0;

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Entry x, Entry y, Entry v) {
    const Entry cx = mod_canon(x, v), cy = mod_canon(y, v);
    if (cx == cy) throw std::invalid_argument("make_edge: endpoints coincide modulo v");
    return cx < cy ? Edge{cx, cy} : Edge{cy, cx};
}

inline std::vector<Edge> cycle_edges(const ModCycle& C) {
    std::vector<Edge> out;
    const std::size_t k = C.vertices.size();
    out.reserve(k);
    for (std::size_t h = 0; h < k; ++h)
        out.push_back(make_edge(C.vertices[h], C.vertices[(h + 1) % k], C.v));
    return out;
}

struct OrthogonalityViolation {
    std::size_t first_index = 0;   // cycle index in B
    std::size_t second_index = 0;  // cycle index in B'
    Entry shift = 0;               // translate of the second cycle
    std::size_t shared_edges = 0;  // > 1
};

struct OrthogonalityReport {
    bool ok = false;
    std::optional<OrthogonalityViolation> violation;  // first one found, if any
};

namespace detail {

// Shared-edge counts between C and every translate of D, bucketed by shift.
// An edge {x,y} of C matches {x'+g, y'+g} for exactly the aligning shifts, so
// it suffices to scan edge pairs instead of all v translates.
inline std::optional<std::pair<Entry, std::size_t>> worst_shift(const ModCycle& C,
                                                                const ModCycle& D) {
    const Entry v = C.v;
    std::map<Entry, std::size_t> count;
    const std::vector<Edge> ec = cycle_edges(C);
    const std::vector<Edge> ed = cycle_edges(D);
    for (const Edge& e : ec) {
        const Entry diff_e = mod_canon(e.b - e.a, v);
        for (const Edge& f : ed) {
            const Entry diff_f = mod_canon(f.b - f.a, v);
            if (diff_f == diff_e) ++count[mod_canon(e.a - f.a, v)];
            if (mod_canon(-diff_f, v) == diff_e) ++count[mod_canon(e.b - f.a, v)];
        }
    }
    std::optional<std::pair<Entry, std::size_t>> worst;
    for (const auto& [g, c] : count)
        if (!worst || c > worst->second) worst = {g, c};
    return worst;
}

}  // namespace detail

// True iff every cycle of B shares at most one edge with every translate of
// every cycle of B'. Checking translates of one side only suffices: the
// shared-edge count between C+i and C'+j depends only on j-i.
inline OrthogonalityReport certify_orthogonal(const BaseCycleSet& B, const BaseCycleSet& Bp) {
    require_coherent(B, "certify_orthogonal");
    require_coherent(Bp, "certify_orthogonal");
    if (B.v != Bp.v) throw std::invalid_argument("certify_orthogonal: moduli differ");
    if (B.kind != Bp.kind) throw std::invalid_argument("certify_orthogonal: graph kinds differ");

    const std::size_t nb = B.cycles.size(), np = Bp.cycles.size();
    auto check_range = [&](std::size_t lo, std::size_t hi) -> std::optional<OrthogonalityViolation> {
        for (std::size_t t = lo; t < hi; ++t) {
            const std::size_t i = t / np, j = t % np;
            auto worst = detail::worst_shift(B.cycles[i], Bp.cycles[j]);
            if (worst && worst->second > 1)
                return OrthogonalityViolation{i, j, worst->first, worst->second};
        }
        return std::nullopt;
    };

    const std::size_t total = nb * np;
    OrthogonalityReport rep;
    if (total >= 4096) {
        const std::size_t workers =
            std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 8);
        const std::size_t chunk = (total + workers - 1) / workers;
        std::vector<std::future<std::optional<OrthogonalityViolation>>> futs;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, check_range, lo, hi));
        }
        for (auto& f : futs) {
            auto viol = f.get();
            if (viol && !rep.violation) rep.violation = viol;  // keep lowest-index finding
        }
    } else {
        rep.violation = check_range(0, total);
    }
    rep.ok = !rep.violation.has_value();
    return rep;
}

// Rotation-and-reflection minimal vertex sequence; used only for reporting
// and fixture comparison, never for certification.
inline std::vector<Entry> canonical_cycle(const ModCycle& C) {
    const std::size_t k = C.vertices.size();
    std::vector<Entry> best;
    for (int rev = 0; rev < 2; ++rev) {
        std::vector<Entry> seq = C.vertices;
        if (rev) std::reverse(seq.begin(), seq.end());
        for (std::size_t s = 0; s < k; ++s) {
            std::vector<Entry> cand;
            cand.reserve(k);
            for (std::size_t h = 0; h < k; ++h) cand.push_back(seq[(s + h) % k]);
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

inline bool same_cycle(const ModCycle& a, const ModCycle& b) {
    return a.v == b.v && canonical_cycle(a) == canonical_cycle(b);
}

// Row-derived and column-derived base cycle sets of a verified array, at the
// modulus implied by the requested graph kind. Both sets are certified, as is
// their orthogonality; a failure after the verification gate would be an
// implementation bug.
inline std::pair<BaseCycleSet, BaseCycleSet> decompositions_from_array(const PartialArray& H,
                                                                       std::size_t k,
                                                                       GraphKind which) {
    const VerificationReport rep = verify(H, k);
    const bool star = rep.classification == Classification::GloballySimpleStar;
    const bool gs = star || rep.classification == Classification::GloballySimple;
    if (which == GraphKind::Complete && !gs)
        throw std::invalid_argument(
            "decompositions_from_array: array is not globally simple, so the complete-graph "
            "decomposition is not certified");
    if (which == GraphKind::CocktailParty && !star)
        throw std::invalid_argument(
            "decompositions_from_array: array is not simple modulo 2nk+2, so the cocktail-party "
            "decomposition is not certified");
    const Entry v = which == GraphKind::Complete ? rep.v_complete : rep.v_cocktail;

    BaseCycleSet rows{which, v, {}};
    for (std::size_t r = 0; r < H.rows(); ++r) rows.cycles.push_back(line_to_cycle(row_line(H, r), v));
    BaseCycleSet cols{which, v, {}};
    for (std::size_t c = 0; c < H.cols(); ++c) cols.cycles.push_back(line_to_cycle(col_line(H, c), v));

    if (!certify_base_cycles(rows).ok || !certify_base_cycles(cols).ok)
        throw InternalInconsistencyError(
            "decompositions_from_array: difference lists of a verified array do not cover the "
            "graph");
    if (!certify_orthogonal(rows, cols).ok)
        throw InternalInconsistencyError(
            "decompositions_from_array: row and column decompositions of a verified array are "
            "not orthogonal");
    return {std::move(rows), std::move(cols)};
}

// ---------------------------------------------------------------------------
// Cycle-set text format: a "#fmt 1" marker, a header "v k count kind", then
// one line per base cycle with vertices as canonical residues.

class CycleFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void write_cycles(std::ostream& os, const BaseCycleSet& B) {
    require_coherent(B, "write_cycles");
    const std::size_t k = B.cycles.empty() ? 0 : B.cycles.front().size();
    for (const ModCycle& C : B.cycles)
        if (C.size() != k) throw std::invalid_argument("write_cycles: cycles must share one length");
    os << "#fmt 1\n" << B.v << ' ' << k << ' ' << B.cycles.size() << ' ' << to_string(B.kind) << '\n';
    for (const ModCycle& C : B.cycles) {
        for (std::size_t h = 0; h < C.vertices.size(); ++h)
            os << (h ? " " : "") << C.vertices[h];
        os << '\n';
    }
}

inline BaseCycleSet parse_cycles(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "#fmt 1")
        throw CycleFormatError("cycle set: missing '#fmt 1' marker");
    if (!std::getline(is, line)) throw CycleFormatError("cycle set: missing header");
    std::istringstream hdr(line);
    Entry v = 0;
    std::size_t k = 0, count = 0;
    std::string kind;
    if (!(hdr >> v >> k >> count >> kind))
        throw CycleFormatError("cycle set: header must be 'v k count kind'");
    std::string rest;
    if (hdr >> rest) throw CycleFormatError("cycle set: trailing tokens in header");
    BaseCycleSet B;
    B.v = v;
    if (kind == "complete") B.kind = GraphKind::Complete;
    else if (kind == "cocktail") B.kind = GraphKind::CocktailParty;
    else throw CycleFormatError("cycle set: kind must be 'complete' or 'cocktail'");
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(is, line)) throw CycleFormatError("cycle set: fewer cycles than declared");
        std::istringstream ls(line);
        std::vector<Entry> verts;
        Entry x;
        while (ls >> x) verts.push_back(x);
        if (!ls.eof()) throw CycleFormatError("cycle set: non-numeric vertex");
        if (verts.size() != k) throw CycleFormatError("cycle set: cycle length differs from header");
        try {
            B.cycles.push_back(mod_cycle(verts, v));
        } catch (const std::invalid_argument& e) {
            throw CycleFormatError(std::string("cycle set: ") + e.what());
        }
    }
    while (std::getline(is, line))
        if (!line.empty()) throw CycleFormatError("cycle set: more lines than declared");
    try {
        require_coherent(B, "parse_cycles");
    } catch (const std::invalid_argument& e) {
        throw CycleFormatError(e.what());
    }
    return B;
}

}  // namespace heffter
