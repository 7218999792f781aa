#pragma once

#include <cstdint>
#include <vector>

// Reference data shared by the unit tests and the acceptance suite. The grid
// fixtures live in tests/fixtures/*.txt; the sequences below are companion
// data for them (orderings, expected cycles). Integers may appear as any
// representative of their residue class; tests canonicalize before comparing.
namespace fx {

using Seq = std::vector<std::int64_t>;
using SeqList = std::vector<Seq>;

// --- companion data for heffter_8x8_k7.txt (simple, not globally simple) ---

// Simple orderings mod 113, one per row and one per column.
inline const SeqList row_orderings_8x8_k7 = {
    {8, 25, 16, -27, -29, 31, -24},
    {-17, -6, -28, 23, 26, 32, -30},
    {39, -10, -5, 33, 15, -35, -37},
    {-38, -18, 7, -36, 11, 34, 40},
    {-43, -45, 47, -22, 3, 41, 19},
    {42, 48, -46, -14, 2, -44, 12},
    {20, -51, -53, 55, -21, 1, 49},
    {-52, 9, 50, 56, -54, -13, 4},
};
inline const SeqList col_orderings_8x8_k7 = {
    {8, 39, -17, -38, -43, 42, 9},
    {16, -6, -45, -10, 48, 49, -52},
    {23, -5, 47, -18, -46, -51, 50},
    {25, -28, 15, 7, -53, -22, 56},
    {-27, 26, 11, 3, 55, -14, -54},
    {-21, 32, 33, -36, 19, 2, -29},
    {-13, -30, -35, 34, 12, 1, 31},
    {-37, -24, 40, 41, -44, 20, 4},
};

// Cycles generated by the partial sums of those orderings in Z_113.
inline const SeqList row_cycles_8x8_k7_v113 = {
    {8, 33, 49, 22, -7, 24, 0},
    {-17, -23, -51, -28, -2, 30, 0},
    {39, 29, 24, 57, 72, 37, 0},
    {-38, -56, -49, -85, -74, -40, 0},
    {-43, -88, -41, -63, -60, -19, 0},
    {42, 90, 44, 30, 32, -12, 0},
    {20, -31, -84, -29, -50, -49, 0},
    {-52, -43, 7, 63, 9, -4, 0},
};
inline const SeqList col_cycles_8x8_k7_v113 = {
    {8, 47, 30, -8, -51, -9, 0},
    {16, 10, -35, -45, 3, 52, 0},
    {23, 18, 65, 47, 1, -50, 0},
    {25, -3, 12, 19, -34, -56, 0},
    {-27, -1, 10, 13, 68, 54, 0},
    {-21, 11, 44, 8, 27, 29, 0},
    {-13, -43, -78, -44, -32, -31, 0},
    {-37, -61, -21, 20, -24, -4, 0},
};

// --- companion data for star_10x10_k8.txt (natural orderings) ---

inline const SeqList row_cycles_10x10_k8_v162 = {
    {77, 157, 79, 8, -62, -141, -72, 0},
    {-17, -37, -62, -90, -64, -45, -27, 0},
    {5, 13, 26, 42, 28, 21, 15, 0},
    {34, 77, 44, 8, -33, -77, -35, 0},
    {21, 45, 74, 106, 76, 53, 31, 0},
    {58, 109, 159, 56, 7, 117, 60, 0},
    {-38, -85, -48, -8, 37, 85, 39, 0},
    {-73, -149, -75, -8, 58, 133, 68, 0},
    {-62, -117, -9, -72, -19, -125, -64, 0},
    {-1, -5, -14, -26, -16, -13, -11, 0},
};
inline const SeqList col_cycles_10x10_k8_v162 = {
    {77, 82, 116, 12, 136, 63, 1, 0},
    {80, 88, 131, 20, 135, 59, 4, 0},
    {-78, -95, -82, -61, -11, 63, 9, 0},
    {-71, -91, -75, -51, 8, 75, 12, 0},
    {-70, -95, -109, -142, -113, -76, -10, 0},
    {-79, -107, -114, -150, -118, -78, -3, 0},
    {26, 20, -21, -51, -100, -55, -2, 0},
    {19, 4, -40, -63, -115, -67, -11, 0},
    {69, 87, 129, 107, 50, 4, -61, 0},
    {72, 99, 134, 103, 43, 4, -64, 0},
};
// Same arrays read mod 161: only rows 6, 9 and columns 1, 2 get new
// representatives.
inline const SeqList row_cycles_10x10_k8_v161 = {
    {77, 157, 79, 8, -62, -141, -72, 0},
    {-17, -37, -62, -90, -64, -45, -27, 0},
    {5, 13, 26, 42, 28, 21, 15, 0},
    {34, 77, 44, 8, -33, -77, -35, 0},
    {21, 45, 74, 106, 76, 53, 31, 0},
    {58, 109, 159, 57, 8, 117, 60, 0},
    {-38, -85, -48, -8, 37, 85, 39, 0},
    {-73, -149, -75, -8, 58, 133, 68, 0},
    {-62, -117, -10, -73, -20, -125, -64, 0},
    {-1, -5, -14, -26, -16, -13, -11, 0},
};
inline const SeqList col_cycles_10x10_k8_v161 = {
    {77, 82, 116, 13, 136, 63, 1, 0},
    {80, 88, 131, 21, 135, 59, 4, 0},
    {-78, -95, -82, -61, -11, 63, 9, 0},
    {-71, -91, -75, -51, 8, 75, 12, 0},
    {-70, -95, -109, -142, -113, -76, -10, 0},
    {-79, -107, -114, -150, -118, -78, -3, 0},
    {26, 20, -21, -51, -100, -55, -2, 0},
    {19, 4, -40, -63, -115, -67, -11, 0},
    {69, 87, 129, 107, 50, 4, -61, 0},
    {72, 99, 134, 103, 43, 4, -64, 0},
};

// --- companion data for diag5_9x9_std.txt ---

// Value sequence of the single 45-cycle obtained by composing the natural
// row ordering with the column ordering that runs the last column bottom-up.
inline const Seq compose_cycle_diag5_9x9 = {
    37, 42, 2, 7, 12, 17, 22, 27, 32, 29, 34, 39, 44, 4, 9, 14, 19, 24, 41,
    1, 6, 11, 16, 21, 26, 31, 36, 33, 38, 43, 3, 8, 13, 18, 23, 28, 25, 5,
    30, 10, 35, 15, 40, 20, 45,
};

} // namespace fx
