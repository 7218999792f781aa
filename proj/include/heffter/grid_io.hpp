#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "array.hpp"

namespace heffter {

struct GridFile {
    PartialArray array;
    std::size_t k;  // declared filled cells per column
};

struct GridFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format:
//   #fmt 1
//   m n k
//   <m rows of n tokens: a signed decimal integer or "." for an empty cell>
// Lines starting with '#' are comments and may appear anywhere. The parser
// enforces only the syntax; 0 entries and duplicate magnitudes parse fine and
// are rejected by verification.
inline GridFile parse_grid(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header))
        throw GridFormatError("grid: missing header line");
    std::size_t m = 0, n = 0, k = 0;
    {
        std::istringstream hs(header);
        std::string extra;
        if (!(hs >> m >> n >> k) || (hs >> extra))
            throw GridFormatError("grid: header must be \"m n k\" (line " +
                                  std::to_string(lineno) + ")");
        if (m == 0 || n == 0 || k == 0)
            throw GridFormatError("grid: m, n, k must be positive (line " +
                                  std::to_string(lineno) + ")");
    }

    PartialArray H(m, n);
    for (std::size_t r = 0; r < m; ++r) {
        std::string row;
        if (!next_content_line(row))
            throw GridFormatError("grid: expected " + std::to_string(m) +
                                  " rows, got " + std::to_string(r));
        std::istringstream rs(row);
        std::string tok;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(rs >> tok))
                throw GridFormatError("grid: row on line " + std::to_string(lineno) +
                                      " has fewer than " + std::to_string(n) + " tokens");
            if (tok == ".") continue;
            std::size_t used = 0;
            Entry value = 0;
            try {
                value = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size())
                throw GridFormatError("grid: bad token \"" + tok + "\" on line " +
                                      std::to_string(lineno));
            H.set_unchecked(r, c, value);
        }
        std::string extra;
        if (rs >> extra)
            throw GridFormatError("grid: row on line " + std::to_string(lineno) +
                                  " has more than " + std::to_string(n) + " tokens");
    }
    std::string trailing;
    if (next_content_line(trailing))
        throw GridFormatError("grid: trailing content on line " + std::to_string(lineno));
    return GridFile{std::move(H), k};
}

inline GridFile parse_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw GridFormatError("grid: cannot open " + path);
    try {
        return parse_grid(in);
    } catch (const GridFormatError& e) {
        throw GridFormatError(path + ": " + e.what());
    }
}

inline void write_grid(std::ostream& out, const PartialArray& H, std::size_t k) {
    out << "#fmt 1\n" << H.rows() << ' ' << H.cols() << ' ' << k << '\n';
    for (std::size_t r = 0; r < H.rows(); ++r) {
        for (std::size_t c = 0; c < H.cols(); ++c) {
            if (c) out << ' ';
            if (const auto& e = H.at(r, c))
                out << *e;
            else
                out << '.';
        }
        out << '\n';
    }
}

inline void write_grid_file(const std::string& path, const PartialArray& H, std::size_t k) {
    std::ostringstream buf;
    write_grid(buf, H, k);
    std::ofstream out(path, std::ios::trunc);
    if (!out || !(out << buf.str()))
        throw GridFormatError("grid: cannot write " + path);
}

} // namespace heffter
