#include "amgf/bfile.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace amgf {

BFileError::BFileError(std::size_t line, const std::string& what)
    : std::runtime_error("b-file line " + std::to_string(line) + ": " + what), line_(line) {}

std::vector<BFileEntry> parse_bfile(std::istream& in) {
    std::vector<BFileEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        std::string index_text, value_text, extra;
        fields >> index_text >> value_text;
        if (value_text.empty() || (fields >> extra)) throw BFileError(lineno, "expected \"index value\"");

        BFileEntry e;
        try {
            std::size_t used = 0;
            e.index = std::stol(index_text, &used);
            if (used != index_text.size()) throw std::invalid_argument(index_text);
        } catch (const std::exception&) {
            throw BFileError(lineno, "bad index \"" + index_text + "\"");
        }
        if (e.value.set_str(value_text, 10) != 0) throw BFileError(lineno, "bad value \"" + value_text + "\"");
        if (!entries.empty() && e.index <= entries.back().index) throw BFileError(lineno, "indices not increasing");
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<BFileEntry> parse_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file " + path.string());
    return parse_bfile(in);
}

BFileMatch compare_bfile(const std::vector<Rational>& coeffs, const std::vector<BFileEntry>& entries,
                         long offset_shift) {
    BFileMatch m;
    for (const auto& e : entries) {
        const long target = e.index + offset_shift;
        if (target < 0 || target >= static_cast<long>(coeffs.size())) continue;
        ++m.compared;
        if (!(coeffs[static_cast<std::size_t>(target)] == Rational(e.value))) {
            m.matched = false;
            m.first_mismatch_index = e.index;
            m.expected = e.value;
            m.actual = coeffs[static_cast<std::size_t>(target)];
            break;
        }
    }
    return m;
}

}  // namespace amgf
