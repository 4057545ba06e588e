#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "rleacs/rle.hpp"

namespace rleacs {

enum class Side : std::uint8_t { x = 0, y = 1 };

/// A run-start suffix: the suffix of one sequence that begins at the first
/// character of run `run` (0-based, sentinel run included).
struct MetaSuffixId {
    Side side = Side::x;
    std::uint32_t run = 0;

    friend auto operator<=>(const MetaSuffixId&, const MetaSuffixId&) = default;
};

/// The runs of an (X, Y) pair laid out back to back, X first. Positions
/// 0..x_runs()-1 belong to X, the rest to Y. X is terminated by sentinel 0
/// and Y by sentinel 1 regardless of the sentinels the inputs carried.
class PairText {
public:
    PairText(const RleSeq& x, const RleSeq& y);

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] std::size_t x_runs() const noexcept { return x_runs_; }
    [[nodiscard]] std::size_t y_runs() const noexcept { return size() - x_runs_; }

    [[nodiscard]] Symbol symbol(std::size_t pos) const { return symbols_[pos]; }
    [[nodiscard]] std::uint64_t length(std::size_t pos) const { return cum_[pos + 1] - cum_[pos]; }

    [[nodiscard]] Side side(std::size_t pos) const { return pos < x_runs_ ? Side::x : Side::y; }
    [[nodiscard]] bool is_first_run(std::size_t pos) const { return pos == 0 || pos == x_runs_; }
    [[nodiscard]] bool is_sentinel_run(std::size_t pos) const { return Alphabet::is_sentinel(symbols_[pos]); }

    [[nodiscard]] MetaSuffixId id(std::size_t pos) const;
    [[nodiscard]] std::size_t pos(MetaSuffixId id) const;

    /// Decoded length of runs [pos, pos + count).
    [[nodiscard]] std::uint64_t span_length(std::size_t pos, std::size_t count) const {
        return cum_[pos + count] - cum_[pos];
    }
    /// Decoded length of the suffix starting at `pos`, sentinel included.
    [[nodiscard]] std::uint64_t suffix_length(std::size_t pos) const;

private:
    std::vector<Symbol> symbols_;
    std::vector<std::uint64_t> cum_;  // cum_[p] = Σ lengths of runs before p
    std::size_t x_runs_ = 0;
};

/// Run-start suffixes in decoded lexicographic order. `order` holds PairText
/// positions; dlcp[k] is the decoded LCP of order[k] and order[k+1].
struct SuffixOrder {
    std::vector<std::uint32_t> order;
    std::vector<std::uint64_t> dlcp;

    friend bool operator==(const SuffixOrder&, const SuffixOrder&) = default;
};

/// Compares the decoded suffixes starting at two positions by walking runs.
std::strong_ordering decoded_compare(const PairText& text, std::size_t a, std::size_t b);

/// Decoded LCP of the suffixes at two positions, evaluated run by run.
std::uint64_t decoded_lcp(const PairText& text, std::size_t a, std::size_t b);

/// Sorts run-start suffixes with token ranking plus prefix doubling, then
/// derives decoded LCPs from a Kasai sweep over the token string.
SuffixOrder build_suffix_order(const PairText& text);

}  // namespace rleacs
