#pragma once

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bignum.hpp"

// Parsing of OEIS b-files and alignment of locally computed sequences
// against them. A b-file is a plain-text list of "index value" lines; lines
// whose first non-blank character is '#' are comments. Indices must be
// contiguous and increasing.
namespace polygram::oeis {

class BFileError : public std::runtime_error {
  public:
    BFileError(const std::string& where, long line, const std::string& what)
        : std::runtime_error(where + ":" + std::to_string(line) + ": " + what), line_(line) {}
    long line() const { return line_; }

  private:
    long line_;
};

struct Sequence {
    std::string id;  // e.g. "A006958"
    std::int64_t first_index = 0;
    std::vector<BigInt> values;

    std::int64_t last_index() const {
        return first_index + static_cast<std::int64_t>(values.size()) - 1;
    }
};

namespace detail {

inline bool is_integer_token(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace detail

// Parses a b-file from a stream. `where` names the source in error
// messages; `id` is attached to the returned sequence.
inline Sequence parse_bfile(std::istream& in, const std::string& where, const std::string& id) {
    Sequence seq;
    seq.id = id;
    std::string line;
    long line_no = 0;
    bool have_any = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;       // blank line
        if (line[first] == '#') continue;               // comment line
        std::istringstream fields(line);
        std::string index_tok, value_tok, extra_tok;
        fields >> index_tok >> value_tok;
        if (value_tok.empty())
            throw BFileError(where, line_no, "expected 'index value'");
        if (fields >> extra_tok)
            throw BFileError(where, line_no, "unexpected trailing field '" + extra_tok + "'");
        if (!detail::is_integer_token(index_tok))
            throw BFileError(where, line_no, "malformed index '" + index_tok + "'");
        if (!detail::is_integer_token(value_tok))
            throw BFileError(where, line_no, "malformed value '" + value_tok + "'");
        std::int64_t index = 0;
        try {
            index = std::stoll(index_tok);
        } catch (const std::exception&) {
            throw BFileError(where, line_no, "index '" + index_tok + "' out of range");
        }
        if (!have_any) {
            seq.first_index = index;
            have_any = true;
        } else if (index != seq.last_index() + 1) {
            throw BFileError(where, line_no,
                             "non-contiguous index " + std::to_string(index) + " after " +
                                 std::to_string(seq.last_index()));
        }
        seq.values.emplace_back(value_tok);
    }
    if (!have_any) throw BFileError(where, line_no, "no data lines");
    return seq;
}

// Parses a b-file from disk. The sequence id is derived from the
// conventional file name bNNNNNN.txt; other stems are kept as-is.
inline Sequence parse_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file: " + path.string());
    std::string stem = path.stem().string();
    std::string id = stem;
    if (stem.size() > 1 && stem[0] == 'b' &&
        stem.find_first_not_of("0123456789", 1) == std::string::npos)
        id = "A" + stem.substr(1);
    return parse_bfile(in, path.string(), id);
}

// Conventional b-file path for a sequence id: "A006958" -> dir/b006958.txt.
inline std::filesystem::path bfile_path(const std::filesystem::path& dir, const std::string& id) {
    if (id.size() < 2 || (id[0] != 'A' && id[0] != 'a'))
        throw std::invalid_argument("bfile_path: sequence id must look like A123456");
    return dir / ("b" + id.substr(1) + ".txt");
}

struct AlignmentReport {
    enum class Status {
        aligned,    // unique probe match found
        no_match,   // probe window matches nowhere
        ambiguous,  // probe window matches more than one position
        too_short,  // not enough terms on one side to probe
    };
    Status status = Status::too_short;
    std::size_t window_offset = 0;    // position of our first term in seq.values
    std::int64_t aligned_index = 0;   // b-file index of our first term
    std::size_t overlap = 0;          // number of compared terms
    bool all_match = false;
    std::string detail;
};

// Aligns a computed prefix against a reference sequence without assuming the
// reference's index offset: slides a window of the first `probe` computed
// terms along the reference, requires exactly one match, then compares every
// shared term from that offset on.
inline AlignmentReport align_and_compare(const std::vector<BigInt>& computed, const Sequence& seq,
                                         std::size_t probe = 5) {
    AlignmentReport r;
    if (computed.size() < probe || seq.values.size() < probe) {
        r.status = AlignmentReport::Status::too_short;
        r.detail = "need at least " + std::to_string(probe) + " terms on both sides";
        return r;
    }
    std::vector<std::size_t> hits;
    for (std::size_t off = 0; off + probe <= seq.values.size(); ++off) {
        bool match = true;
        for (std::size_t i = 0; i < probe; ++i)
            if (seq.values[off + i] != computed[i]) {
                match = false;
                break;
            }
        if (match) hits.push_back(off);
    }
    if (hits.empty()) {
        r.status = AlignmentReport::Status::no_match;
        r.detail = "probe window matches nowhere in " + seq.id;
        return r;
    }
    if (hits.size() > 1) {
        r.status = AlignmentReport::Status::ambiguous;
        r.detail = "probe window matches " + std::to_string(hits.size()) + " positions in " + seq.id;
        return r;
    }
    r.status = AlignmentReport::Status::aligned;
    r.window_offset = hits.front();
    r.aligned_index = seq.first_index + static_cast<std::int64_t>(hits.front());
    r.overlap = std::min(computed.size(), seq.values.size() - hits.front());
    r.all_match = true;
    for (std::size_t i = 0; i < r.overlap; ++i)
        if (computed[i] != seq.values[r.window_offset + i]) {
            r.all_match = false;
            r.detail = "mismatch at " + seq.id + "(" +
                       std::to_string(r.aligned_index + static_cast<std::int64_t>(i)) + ")";
            break;
        }
    if (r.all_match)
        r.detail = "aligned at " + seq.id + "(" + std::to_string(r.aligned_index) + "), " +
                   std::to_string(r.overlap) + " terms agree";
    return r;
}

}  // namespace polygram::oeis
