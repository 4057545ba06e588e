#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "rleacs/rle.hpp"

namespace rleacs {

/// Symbols used by generated sequences; the first k form a k-letter alphabet.
inline constexpr std::string_view kCorpusSymbols = "ACGTDEFHIKLMNPQRSVWY";

struct RandomRleParams {
    std::size_t alphabet_size = 4;  // 2..20
    double mean_run = 4.0;          // geometric run lengths, >= 1
    std::uint64_t max_length = 2000;  // decoded length drawn uniformly from [1, max_length]
};

/// Random sequence with maximal runs; neighbouring runs never share a symbol.
RleSeq random_rle(std::mt19937_64& rng, const RandomRleParams& params, std::string name);

/// Parameters of the k-th verification trial: cycles through alphabet sizes
/// {2, 4, 20} and mean run lengths {1.5, 4, 32}.
RandomRleParams verification_params(std::size_t trial, std::uint64_t max_length);

/// Benchmark pair with exactly `runs` runs per sequence. Base lengths are
/// uniform in [1, 10] and multiplied by `scale / 10`, so the run structure
/// for a given seed is the same at every scale.
std::pair<RleSeq, RleSeq> bench_pair(std::size_t runs, std::uint64_t scale, std::uint64_t seed);

}  // namespace rleacs
