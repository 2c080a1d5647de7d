#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qvm {

// Black-box function table. A query applies |i>|j> -> |i>|j xor f(i)>, which
// is a permutation of the basis and hence unitary.
class Oracle {
public:
    Oracle() = default;
    // Table length must be a power of two; values must fit output_width bits.
    Oracle(std::vector<std::uint64_t> table, std::size_t output_width);

    std::size_t input_width() const { return input_width_; }
    std::size_t output_width() const { return output_width_; }
    std::uint64_t size() const { return table_.size(); }

    std::uint64_t value(std::uint64_t i) const { return table_.at(i); }
    const std::vector<std::uint64_t>& table() const { return table_; }

private:
    std::size_t input_width_ = 0;
    std::size_t output_width_ = 0;
    std::vector<std::uint64_t> table_;
};

Oracle make_oracle(std::vector<std::uint64_t> table, std::size_t output_width);

// Boolean oracle from a marked-index list.
Oracle make_marking_oracle(std::size_t input_width, const std::vector<std::uint64_t>& marked);

// Table file: optional '#' comments, a "format decimal|binary" header, then
// one "index value" pair per line. Every index in [0, 2^n) must appear once.
Oracle load_oracle_file(const std::string& path);
std::string render_oracle_table(const Oracle& oracle, bool binary);

}  // namespace qvm
