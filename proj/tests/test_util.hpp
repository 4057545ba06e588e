#pragma once

#include <random>
#include <string>

#include "rleacs/corpus.hpp"
#include "rleacs/rle.hpp"

namespace rleacs::testing {

inline RleSeq seq(std::string_view text, std::string name = "s") { return encode(text, std::move(name)); }

inline std::string random_text(std::mt19937_64& rng, std::size_t alphabet, std::size_t max_len, double mean_run) {
    return decode(random_rle(rng, {alphabet, mean_run, max_len}, "r"));
}

}  // namespace rleacs::testing
