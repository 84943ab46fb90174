// OEIS b-file reading and comparison against computed coefficients.
#pragma once

#include "amgf/rational.hpp"

#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <vector>

namespace amgf {

struct BFileEntry {
    long index = 0;
    Integer value;
};

class BFileError : public std::runtime_error {
public:
    BFileError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// "index value" per line, whitespace separated; blank lines and lines
/// starting with '#' are skipped. Indices must strictly increase.
std::vector<BFileEntry> parse_bfile(std::istream& in);
std::vector<BFileEntry> parse_bfile(const std::filesystem::path& path);

struct BFileMatch {
    bool matched = true;
    /// Entries that landed inside the coefficient range.
    std::size_t compared = 0;
    std::optional<long> first_mismatch_index;
    std::optional<Integer> expected;  // from the file
    std::optional<Rational> actual;   // computed
};

/// Entry index i is compared with coefficient i + offset_shift; entries
/// whose target lies outside 0..size-1 are outside the overlap.
BFileMatch compare_bfile(const std::vector<Rational>& coeffs, const std::vector<BFileEntry>& entries, long offset_shift);

}  // namespace amgf
