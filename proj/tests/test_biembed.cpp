#include <catch2/catch_amalgamated.hpp>

#include <heffter/biembed.hpp>
#include <heffter/construct.hpp>
#include <heffter/grid_io.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "fixture_data.hpp"
#include "test_util.hpp"

using namespace heffter;

namespace {

// n x n array filled exactly on the k diagonals starting at D_1 (or at
// D_{1+shift}), with entries 1..nk. Composition structure depends only on
// which cells are filled, so sequential values suffice.
PartialArray make_diag(std::size_t n, std::size_t k, std::size_t shift = 0) {
    PartialArray H(n, n);
    Entry next = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < k; ++s) H.set(i, (i + s + shift) % n, next++);
    return H;
}

std::vector<Entry> values_along(const PartialArray& H, const std::vector<Cell>& cells) {
    std::vector<Entry> out;
    out.reserve(cells.size());
    for (const Cell& c : cells) out.push_back(*H.at(c.row, c.col));
    return out;
}

}  // namespace

TEST_CASE("orderings cover each line once, in the declared direction") {
    const GridFile g = tu::load_fixture("diag5_9x9_std.txt");
    const PartialArray& H = g.array;

    const CellOrdering wr = natural_row_ordering(H);
    REQUIRE(wr.lines.size() == 9);
    CHECK(wr.sequence().size() == 45);
    for (const auto& block : wr.lines) {
        REQUIRE(block.size() == 5);
        for (std::size_t i = 0; i < block.size(); ++i) {
            CHECK(block[i].row == block[0].row);
            if (i) CHECK(block[i - 1].col < block[i].col);
        }
    }

    const CellOrdering down = column_ordering(H, 0);
    const CellOrdering tail = column_ordering(H, 1);
    REQUIRE(down.lines.size() == 9);
    REQUIRE(tail.lines.size() == 9);
    for (std::size_t c = 0; c + 1 < 9; ++c) CHECK(tail.lines[c] == down.lines[c]);
    std::vector<Cell> last = down.lines.back();
    std::reverse(last.begin(), last.end());
    CHECK(tail.lines.back() == last);

    CHECK_THROWS_AS(column_ordering(H, 10), std::invalid_argument);
}

TEST_CASE("composition reproduces the printed forty-five cell cycle") {
    const GridFile g = tu::load_fixture("diag5_9x9_std.txt");
    const PartialArray& H = g.array;

    const auto [wr, wc] = odd_diagonal_orderings(H);
    const CompositionResult res = compose(wr, wc);
    CHECK(res.is_single_cycle);
    REQUIRE(res.cycle_lengths == std::vector<std::size_t>{45});
    REQUIRE(res.cycles.size() == 1);

    std::vector<Entry> got = values_along(H, res.cycles.front());
    const auto at37 = std::find(got.begin(), got.end(), 37);
    REQUIRE(at37 != got.end());
    std::rotate(got.begin(), at37, got.end());
    CHECK(got == fx::compose_cycle_diag5_9x9);
}

TEST_CASE("composing an ordering with its reversal fixes every cell") {
    const PartialArray H = make_diag(9, 5);
    const CellOrdering wr = natural_row_ordering(H);
    CellOrdering inverse = wr;
    for (auto& block : inverse.lines) std::reverse(block.begin(), block.end());

    const CompositionResult res = compose(wr, inverse);
    CHECK_FALSE(res.is_single_cycle);
    CHECK(res.cycle_lengths == std::vector<std::size_t>(45, 1));
}

TEST_CASE("composition validates its input") {
    const PartialArray A = make_diag(9, 5);
    const PartialArray B = make_diag(3, 3);
    CHECK_THROWS_AS(compose(natural_row_ordering(A), column_ordering(B)), std::invalid_argument);

    // Same cell count, different cells.
    const PartialArray C = make_diag(9, 1);
    CHECK_THROWS_AS(compose(natural_row_ordering(B), column_ordering(C)), std::invalid_argument);

    CellOrdering dup;
    dup.lines = {{Cell{0, 0}, Cell{0, 1}, Cell{0, 0}}};
    CHECK_THROWS_AS(compose(dup, dup), std::invalid_argument);

    CellOrdering empty_block;
    empty_block.lines = {{}};
    CHECK_THROWS_AS(compose(empty_block, empty_block), std::invalid_argument);
}

TEST_CASE("odd diagonal counts with coprime n give a single full cycle") {
    for (std::size_t k : {std::size_t{3}, std::size_t{5}, std::size_t{9}}) {
        for (std::size_t n = k; n <= 29; n += 2) {
            if (std::gcd(n, k - 1) != 1) continue;
            const PartialArray H = make_diag(n, k);
            const auto [wr, wc] = odd_diagonal_orderings(H);
            const CompositionResult res = compose(wr, wc);
            INFO("n=" << n << " k=" << k);
            CHECK(res.is_single_cycle);
            CHECK(res.cycle_lengths == std::vector<std::size_t>{n * k});
        }
    }
    SECTION("fully filled odd arrays compose to a single square-length cycle") {
        for (std::size_t n : {std::size_t{3}, std::size_t{5}, std::size_t{7}}) {
            const auto [wr, wc] = odd_diagonal_orderings(make_diag(n, n));
            const CompositionResult res = compose(wr, wc);
            CHECK(res.is_single_cycle);
            CHECK(res.cycle_lengths == std::vector<std::size_t>{n * n});
        }
    }
    SECTION("gates") {
        CHECK_THROWS_AS(odd_diagonal_orderings(make_diag(8, 3)), std::invalid_argument);   // gcd(8,2)=2
        CHECK_THROWS_AS(odd_diagonal_orderings(make_diag(10, 5)), std::invalid_argument);  // gcd(10,4)=2
        CHECK_THROWS_AS(odd_diagonal_orderings(make_diag(8, 4)), std::invalid_argument);   // even count
        CHECK_THROWS_AS(odd_diagonal_orderings(make_diag(9, 5, 1)), std::invalid_argument);  // not standard
        CHECK_THROWS_AS(odd_diagonal_orderings(PartialArray(3, 4)), std::invalid_argument);  // not square
    }
    SECTION("without the reversal the composition is not one cycle") {
        // Natural columns on the 45-cell example split into several cycles
        // that still cover every cell.
        const PartialArray H = make_diag(9, 5);
        const CompositionResult res = compose(natural_row_ordering(H), column_ordering(H, 0));
        CHECK_FALSE(res.is_single_cycle);
        CHECK(std::accumulate(res.cycle_lengths.begin(), res.cycle_lengths.end(),
                              std::size_t{0}) == 45);
    }
}

TEST_CASE("seven-diagonal arrays of odd size give a single full cycle") {
    for (std::size_t n = 7; n <= 31; n += 2) {
        const auto [wr, wc] = seven_diagonal_orderings(make_diag(n, 7));
        const CompositionResult res = compose(wr, wc);
        INFO("n=" << n);
        CHECK(res.is_single_cycle);
        CHECK(res.cycle_lengths == std::vector<std::size_t>{7 * n});
    }
    SECTION("a built seven-per-line array is seven-diagonal and composes to one cycle") {
        const PartialArray H = build_k7(9);
        const auto prof = diagonal_profile(H);
        REQUIRE(prof.has_value());
        CHECK(prof->k == 7);
        const auto [wr, wc] = seven_diagonal_orderings(standard_form(H));
        const CompositionResult res = compose(wr, wc);
        CHECK(res.is_single_cycle);
        CHECK(res.cycle_lengths == std::vector<std::size_t>{63});
    }
    SECTION("gates") {
        CHECK_THROWS_AS(seven_diagonal_orderings(make_diag(8, 7)), std::invalid_argument);   // even n
        CHECK_THROWS_AS(seven_diagonal_orderings(make_diag(9, 5)), std::invalid_argument);   // not 7 diagonals
        CHECK_THROWS_AS(seven_diagonal_orderings(make_diag(9, 7, 2)), std::invalid_argument);  // not standard
    }
}

TEST_CASE("reversing the last two columns composes the eleven-by-eleven nine-diagonal layout") {
    const PartialArray H = make_diag(11, 9);
    const CompositionResult res = compose(natural_row_ordering(H), column_ordering(H, 2));
    CHECK(res.is_single_cycle);
    CHECK(res.cycle_lengths == std::vector<std::size_t>{99});
}

TEST_CASE("row relabeling into standard form does not change composition structure") {
    const PartialArray A = tu::load_fixture("diag5_9x9_r8.txt").array;
    const PartialArray B = tu::load_fixture("diag5_9x9_std.txt").array;
    REQUIRE(standard_form(A) == B);

    const CompositionResult on_a = compose(natural_row_ordering(A), column_ordering(A, 1));
    const CompositionResult on_b = compose(natural_row_ordering(B), column_ordering(B, 1));
    CHECK(on_a.cycle_lengths == on_b.cycle_lengths);
    CHECK(on_a.is_single_cycle);

    SECTION("and values are irrelevant: equal positions give equal cycles") {
        PartialArray C = make_diag(9, 5);
        PartialArray D(9, 9);
        std::vector<Entry> vals(45);
        std::iota(vals.begin(), vals.end(), 1);
        std::shuffle(vals.begin(), vals.end(), tu::rng());
        std::size_t idx = 0;
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t s = 0; s < 5; ++s) D.set(i, (i + s) % 9, vals[idx++]);
        const auto rc = compose(natural_row_ordering(C), column_ordering(C, 1));
        const auto rd = compose(natural_row_ordering(D), column_ordering(D, 1));
        CHECK(rc.cycles == rd.cycles);
    }
}

TEST_CASE("reversal of a line summing to zero preserves simplicity") {
    const GridFile g = tu::load_fixture("star_10x10_k8.txt");
    for (Entry v : {Entry{161}, Entry{162}}) {
        for (std::size_t c = 0; c < 10; ++c) {
            std::vector<Entry> vals = col_line(g.array, c).values;
            const bool fwd = is_simple_ordering(vals, v);
            std::reverse(vals.begin(), vals.end());
            CHECK(fwd == is_simple_ordering(vals, v));
        }
    }
}

TEST_CASE("hypothesis certification") {
    SECTION("seven per line, size nine: the four-column reversal applies") {
        const BiembedReport rep = certify_biembedding(build_k7(9), 7);
        CHECK(rep.heffter);
        CHECK(rep.diagonal);
        CHECK(rep.method == "reverse-last-4");  // gcd(9,6) = 3 rules out the one-column form
        CHECK(rep.compatible);
        CHECK(rep.complete.v == 127);
        CHECK(rep.cocktail.v == 128);
        CHECK(rep.complete.ok);
        CHECK(rep.cocktail.ok);
    }
    SECTION("seven per line, size thirteen: the one-column reversal applies") {
        const BiembedReport rep = certify_biembedding(build_k7(13), 7);
        CHECK(rep.method == "reverse-last-1");
        CHECK(rep.compatible);
        CHECK(rep.complete.ok);
        CHECK(rep.cocktail.ok);
    }
    SECTION("nine per line at sizes fifteen and nineteen") {
        for (Entry n : {Entry{15}, Entry{19}}) {
            const BiembedReport rep = certify_biembedding(build_k9(n), 9);
            INFO("n=" << n);
            CHECK(rep.heffter);
            CHECK(rep.diagonal);
            CHECK(rep.method == "reverse-last-1");
            CHECK(rep.compatible);
            CHECK(rep.complete.ok);
            CHECK(rep.cocktail.ok);
        }
    }
    SECTION("non-diagonal arrays are declined without error") {
        const GridFile g = tu::load_fixture("heffter_8x8_k7.txt");
        const BiembedReport rep = certify_biembedding(g.array, g.k);
        CHECK(rep.heffter);
        CHECK_FALSE(rep.diagonal);
        CHECK(rep.method.empty());
        CHECK_FALSE(rep.compatible);
        CHECK_FALSE(rep.complete.ok);
        CHECK_FALSE(rep.cocktail.ok);
    }
    SECTION("six per line is not diagonal, so no construction applies") {
        const BiembedReport rep = certify_biembedding(build_k6(8), 6);
        CHECK(rep.heffter);
        CHECK_FALSE(rep.diagonal);
        CHECK_FALSE(rep.complete.ok);
    }
    SECTION("diagonal but not a Heffter array: structure passes, conclusion fails") {
        const GridFile g = tu::load_fixture("diag5_9x9_std.txt");
        const BiembedReport rep = certify_biembedding(g.array, 5);
        CHECK_FALSE(rep.heffter);  // rows do not sum to zero
        CHECK(rep.diagonal);
        CHECK(rep.method == "reverse-last-1");
        CHECK(rep.compatible);
        CHECK_FALSE(rep.complete.ok);
        CHECK_FALSE(rep.cocktail.ok);
    }
}
