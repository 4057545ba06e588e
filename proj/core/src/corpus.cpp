#include "rleacs/corpus.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace rleacs {

namespace {

Symbol pick_symbol(std::mt19937_64& rng, std::size_t k, const std::vector<Run>& runs) {
    if (runs.empty()) return Alphabet::of(kCorpusSymbols[std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)]);
    // Uniform over the k-1 symbols differing from the previous run.
    const auto prev = static_cast<std::size_t>(kCorpusSymbols.find(Alphabet::to_char(runs.back().symbol)));
    std::size_t s = std::uniform_int_distribution<std::size_t>(0, k - 2)(rng);
    if (s >= prev) ++s;
    return Alphabet::of(kCorpusSymbols[s]);
}

}  // namespace

RleSeq random_rle(std::mt19937_64& rng, const RandomRleParams& params, std::string name) {
    const std::size_t k = std::clamp<std::size_t>(params.alphabet_size, 2, kCorpusSymbols.size());
    const std::uint64_t target = std::uniform_int_distribution<std::uint64_t>(1, std::max<std::uint64_t>(1, params.max_length))(rng);
    std::geometric_distribution<std::uint64_t> extra(1.0 / std::max(1.0, params.mean_run));

    std::vector<Run> runs;
    std::uint64_t total = 0;
    while (total < target) {
        const std::uint64_t len = std::min<std::uint64_t>(1 + extra(rng), target - total);
        runs.push_back({pick_symbol(rng, k, runs), len});
        total += len;
    }
    return from_runs(std::move(name), std::move(runs));
}

RandomRleParams verification_params(std::size_t trial, std::uint64_t max_length) {
    static constexpr std::array<std::size_t, 3> kSizes{2, 4, 20};
    static constexpr std::array<double, 3> kMeans{1.5, 4.0, 32.0};
    return {kSizes[trial % 3], kMeans[(trial / 3) % 3], max_length};
}

std::pair<RleSeq, RleSeq> bench_pair(std::size_t runs, std::uint64_t scale, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint64_t factor = std::max<std::uint64_t>(1, scale / 10);
    const auto make = [&](std::string name) {
        std::vector<Run> rs;
        rs.reserve(runs);
        std::uniform_int_distribution<std::uint64_t> base(1, 10);
        for (std::size_t i = 0; i < runs; ++i) rs.push_back({pick_symbol(rng, 4, rs), base(rng) * factor});
        return from_runs(std::move(name), std::move(rs));
    };
    auto x = make("X");
    auto y = make("Y");
    return {std::move(x), std::move(y)};
}

}  // namespace rleacs
