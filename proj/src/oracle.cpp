#include "qvm/oracle.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qvm {

Oracle::Oracle(std::vector<std::uint64_t> table, std::size_t output_width)
    : output_width_(output_width), table_(std::move(table)) {
    if (table_.empty() || !std::has_single_bit(table_.size())) {
        throw std::domain_error("oracle table length must be a power of two");
    }
    if (output_width_ == 0 || output_width_ > 63) {
        throw std::domain_error("oracle output width out of range");
    }
    input_width_ = std::size_t(std::countr_zero(table_.size()));
    std::uint64_t limit = std::uint64_t(1) << output_width_;
    for (std::uint64_t v : table_) {
        if (v >= limit) throw std::domain_error("oracle value exceeds output width");
    }
}

Oracle make_oracle(std::vector<std::uint64_t> table, std::size_t output_width) {
    return Oracle(std::move(table), output_width);
}

Oracle make_marking_oracle(std::size_t input_width, const std::vector<std::uint64_t>& marked) {
    std::vector<std::uint64_t> table(std::uint64_t(1) << input_width, 0);
    for (std::uint64_t m : marked) table.at(m) = 1;
    return Oracle(std::move(table), 1);
}

namespace {
std::uint64_t parse_entry(const std::string& tok, bool binary, int line_no) {
    try {
        if (binary) {
            for (char c : tok) {
                if (c != '0' && c != '1') throw std::invalid_argument("not binary");
            }
            return std::stoull(tok, nullptr, 2);
        }
        return std::stoull(tok);
    } catch (const std::exception&) {
        throw std::runtime_error("oracle file line " + std::to_string(line_no) +
                                 ": bad entry '" + tok + "'");
    }
}
}  // namespace

Oracle load_oracle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open oracle file " + path);

    bool binary = false;
    bool have_format = false;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
    std::string line;
    int line_no = 0;
    std::uint64_t max_value = 0;

    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        std::string a;
        if (!(ss >> a)) continue;
        if (!have_format) {
            std::string b;
            if (a != "format" || !(ss >> b) || (b != "decimal" && b != "binary")) {
                throw std::runtime_error("oracle file line " + std::to_string(line_no) +
                                         ": expected 'format decimal|binary' header");
            }
            binary = (b == "binary");
            have_format = true;
            continue;
        }
        std::string b;
        if (!(ss >> b)) {
            throw std::runtime_error("oracle file line " + std::to_string(line_no) +
                                     ": expected 'index value'");
        }
        std::uint64_t idx = parse_entry(a, binary, line_no);
        std::uint64_t val = parse_entry(b, binary, line_no);
        entries.emplace_back(idx, val);
        max_value = std::max(max_value, val);
    }
    if (entries.empty()) throw std::runtime_error("oracle file has no entries");

    std::size_t n = entries.size();
    std::vector<std::uint64_t> table(n, 0);
    std::vector<bool> seen(n, false);
    for (auto [idx, val] : entries) {
        if (idx >= n || seen[idx]) {
            throw std::runtime_error("oracle file: indices must cover [0, n) exactly once");
        }
        seen[idx] = true;
        table[idx] = val;
    }
    std::size_t width = 1;
    while ((std::uint64_t(1) << width) <= max_value) ++width;
    return Oracle(std::move(table), width);
}

std::string render_oracle_table(const Oracle& oracle, bool binary) {
    std::ostringstream out;
    out << "format " << (binary ? "binary" : "decimal") << "\n";
    for (std::uint64_t i = 0; i < oracle.size(); ++i) {
        if (binary) {
            for (std::size_t b = oracle.input_width(); b-- > 0;) out << ((i >> b) & 1);
            out << ' ';
            for (std::size_t b = oracle.output_width(); b-- > 0;)
                out << ((oracle.value(i) >> b) & 1);
        } else {
            out << i << ' ' << oracle.value(i);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qvm
