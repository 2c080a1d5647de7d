#include <bit>
#include <sstream>
#include <stdexcept>

#include "qvm/algorithms.hpp"
#include "qvm/css_code.hpp"

namespace qvm {

void LinearCodeF2::validate() const {
    if (length == 0 || length > 63) throw std::domain_error("code length out of range");
    // rank check by elimination
    std::vector<std::uint64_t> rows = generators;
    std::size_t rank = 0;
    for (std::size_t bit = 0; bit < length && rank < rows.size(); ++bit) {
        std::uint64_t mask = std::uint64_t(1) << (length - 1 - bit);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
        }
        ++rank;
    }
    if (rank != generators.size()) {
        throw std::domain_error("generator rows are linearly dependent");
    }
    for (std::uint64_t g : generators) {
        if (g >> length) throw std::domain_error("generator exceeds the code length");
    }
}

std::vector<std::uint64_t> LinearCodeF2::span() const {
    std::vector<std::uint64_t> words;
    words.reserve(std::size_t(1) << generators.size());
    for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << generators.size()); ++pick) {
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if ((pick >> i) & 1u) w ^= generators[i];
        }
        words.push_back(w);
    }
    return words;
}

std::size_t LinearCodeF2::minimum_distance() const {
    std::size_t best = length;
    for (std::uint64_t w : span()) {
        if (w == 0) continue;
        best = std::min<std::size_t>(best, std::size_t(std::popcount(w)));
    }
    return best;
}

bool LinearCodeF2::contains(std::uint64_t word) const {
    // reduce against the generators
    std::vector<std::uint64_t> rows = generators;
    std::uint64_t w = word;
    for (std::size_t bit = 0; bit < length; ++bit) {
        std::uint64_t mask = std::uint64_t(1) << (length - 1 - bit);
        std::uint64_t* pivot = nullptr;
        for (auto& r : rows) {
            if (r & mask) {
                pivot = &r;
                break;
            }
        }
        if (!pivot) continue;
        std::uint64_t p = *pivot;
        for (auto& r : rows) {
            if (&r != pivot && (r & mask)) r ^= p;
        }
        if (w & mask) w ^= p;
        *pivot = 0;
    }
    return w == 0;
}

LinearCodeF2 dual_code(const LinearCodeF2& code) {
    code.validate();
    LinearCodeF2 dual;
    dual.length = code.length;
    dual.generators = f2_nullspace(code.generators, code.length);
    if (!dual.generators.empty()) dual.validate();
    return dual;
}

LinearCodeF2 parse_generator_matrix(const std::string& text) {
    LinearCodeF2 code;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;
        if (code.length == 0) {
            code.length = tok.size();
        } else if (tok.size() != code.length) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": row length differs from previous rows");
        }
        std::uint64_t row = 0;
        for (char c : tok) {
            if (c != '0' && c != '1') {
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": rows must be 0/1 strings");
            }
            row = (row << 1) | std::uint64_t(c - '0');
        }
        code.generators.push_back(row);
    }
    if (code.generators.empty()) throw std::runtime_error("empty generator matrix");
    code.validate();
    return code;
}

}  // namespace qvm
