#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rleacs/int128.hpp"
#include "rleacs/rle.hpp"
#include "rleacs/suffix_order.hpp"

// Brute-force references over decoded strings. Nothing here shares code with
// the index-based engine beyond the RLE types.
namespace rleacs::oracle {

struct OracleBudget {
    std::uint64_t max_length = 2000;        // per sequence, decoded
    std::uint64_t max_product = 4'000'000;  // x * y
};

/// L[i] = max_j lcp(X[i..], Y[j..]) via the all-pairs lcp table.
std::vector<std::uint64_t> brute_L(std::string_view x, std::string_view y, const OracleBudget& budget = {});

/// Σ brute_L / x.
Rational brute_acs(std::string_view x, std::string_view y, const OracleBudget& budget = {});

/// Decodes both sequences (X ends in byte 0, Y in byte 1), sorts the run-start
/// suffixes as plain strings and scans adjacent LCPs. Positions follow the
/// PairText layout: X runs first, then Y runs.
SuffixOrder brute_suffix_sort(const RleSeq& x, const RleSeq& y, const OracleBudget& budget = {});

}  // namespace rleacs::oracle
