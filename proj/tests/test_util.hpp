#pragma once

#include <random>
#include <string>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/grid_io.hpp"

namespace tu {

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

inline heffter::GridFile load_fixture(const std::string& name) {
    return heffter::parse_grid_file(fixture_path(name));
}

// Reduce a sequence of arbitrary representatives to canonical residues.
inline std::vector<heffter::Entry> canon(const std::vector<std::int64_t>& seq, heffter::Entry v) {
    std::vector<heffter::Entry> out;
    out.reserve(seq.size());
    for (auto x : seq) out.push_back(heffter::mod_canon(x, v));
    return out;
}

// Deterministic RNG for property tests.
inline std::mt19937_64 rng(std::uint64_t seed = 0x5eed) { return std::mt19937_64(seed); }

} // namespace tu
