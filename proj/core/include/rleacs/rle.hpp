#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rleacs {

/// Bad input data: malformed files, invalid sequences, size limits.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& msg)
        : DataError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Internal symbol id. Ids are ordered; ids 0 and 1 are the two sentinels and
/// every alphabet symbol has a larger id.
enum class Symbol : std::uint8_t {};

/// Fixed byte alphabet: an external byte maps to the id with the same value.
/// Bytes 0x00 and 0x01 are reserved for the sentinels and cannot appear in
/// input text.
struct Alphabet {
    static constexpr int kSentinels = 2;

    static constexpr Symbol sentinel(int which) { return Symbol(static_cast<std::uint8_t>(which)); }
    static constexpr bool is_sentinel(Symbol s) { return static_cast<std::uint8_t>(s) < kSentinels; }
    static constexpr bool is_reserved(char c) { return static_cast<unsigned char>(c) < kSentinels; }
    static constexpr Symbol of(char c) { return Symbol(static_cast<unsigned char>(c)); }
    static constexpr char to_char(Symbol s) { return static_cast<char>(static_cast<std::uint8_t>(s)); }
};

/// Upper bound on the decoded length of one sequence (sentinel included).
inline constexpr std::uint64_t kMaxDecodedLength = std::uint64_t{1} << 62;

struct Run {
    Symbol symbol{};
    std::uint64_t length = 1;

    friend bool operator==(const Run&, const Run&) = default;
};

/// A named run-length encoded sequence. The last run is always a length-1
/// sentinel run; runs are maximal.
class RleSeq {
public:
    RleSeq() = default;

    /// Validates the invariants and throws DataError when they do not hold.
    RleSeq(std::string name, std::vector<Run> runs);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::vector<Run>& runs() const noexcept { return runs_; }

    /// Total run count, sentinel included.
    [[nodiscard]] std::size_t run_count() const noexcept { return runs_.size(); }
    /// Number of real (non-sentinel) runs.
    [[nodiscard]] std::size_t text_runs() const noexcept { return runs_.size() - 1; }

    /// Σ run lengths, sentinel included.
    [[nodiscard]] std::uint64_t decoded_length() const noexcept { return decoded_length_; }
    /// Decoded length without the sentinel.
    [[nodiscard]] std::uint64_t text_length() const noexcept { return decoded_length_ - 1; }

    [[nodiscard]] Symbol sentinel() const noexcept { return runs_.back().symbol; }
    [[nodiscard]] RleSeq with_sentinel(Symbol s) const;

private:
    std::string name_;
    std::vector<Run> runs_;
    std::uint64_t decoded_length_ = 0;
};

/// Run-length encodes `text` and appends the sentinel.
RleSeq encode(std::string_view text, std::string name, Symbol sentinel = Alphabet::sentinel(0));

/// Builds a sequence from user-supplied runs (no sentinel). Adjacent runs with
/// the same symbol are merged; one message per merge is appended to
/// `warnings` when it is non-null.
RleSeq from_runs(std::string name, std::vector<Run> runs, std::vector<std::string>* warnings = nullptr,
                 Symbol sentinel = Alphabet::sentinel(0));

inline constexpr std::uint64_t kDefaultDecodeLimit = std::uint64_t{1} << 30;

/// Expands the runs. Sentinels render as bytes 0x00 / 0x01.
std::string decode(const RleSeq& seq, bool keep_sentinel = false, std::uint64_t limit = kDefaultDecodeLimit);

struct ParsedInput {
    std::vector<RleSeq> sequences;
    std::vector<std::string> warnings;
};

/// RLE text records: ">name" header lines, then whitespace-separated
/// "<symbol><count>" tokens.
ParsedInput parse_rle_text(std::istream& in);

ParsedInput parse_fasta(std::istream& in);

/// One record in RLE text format, sentinel omitted, e.g. ">s1\na12 b3 a1\n".
std::string format_rle_text(const RleSeq& seq);

}  // namespace rleacs
