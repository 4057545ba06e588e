#pragma once

#include <cstdint>
#include <vector>

#include "rleacs/int128.hpp"
#include "rleacs/rle.hpp"
#include "rleacs/sigma_trie.hpp"
#include "rleacs/suffix_order.hpp"
#include "rleacs/trie.hpp"

namespace rleacs {

/// ACS(X, Y) as the exact ratio lsum / x, where lsum = Σ_p L[p] and x is the
/// decoded length of X without its sentinel.
struct AcsResult {
    u128 lsum = 0;
    std::uint64_t x = 1;

    [[nodiscard]] Rational value() const { return {lsum, x}; }
    [[nodiscard]] double to_double() const { return value().to_double(); }
};

struct EngineOptions {
    FreqAggregate freq_aggregate = FreqAggregate::max;
};

/// Holds the index structures for one ordered pair (X, Y) and answers the
/// per-run and per-position matching-length queries against Y.
///
/// Run indices are 0-based and cover the real runs of X, [0, x_runs()).
class AcsEngine {
public:
    AcsEngine(const RleSeq& x, const RleSeq& y, EngineOptions options = {});

    /// Number of real runs in X.
    [[nodiscard]] std::size_t x_runs() const noexcept { return text_.x_runs() - 1; }
    [[nodiscard]] std::size_t y_runs() const noexcept { return text_.y_runs() - 1; }
    /// Total runs in the pair, sentinels included.
    [[nodiscard]] std::size_t total_runs() const noexcept { return text_.size(); }
    [[nodiscard]] std::uint64_t x_length() const { return text_.suffix_length(0) - 1; }
    [[nodiscard]] std::uint64_t y_length() const { return text_.suffix_length(text_.x_runs()) - 1; }

    /// Σ L[p] over the positions of run `run` of X.
    [[nodiscard]] u128 compute_A(std::size_t run) const;

    [[nodiscard]] AcsResult acs() const;

    /// L[p] for every decoded position of X, one binary search per position.
    /// Throws DataError when x exceeds `position_cap`.
    [[nodiscard]] std::vector<std::uint64_t> compute_L_per_position(std::uint64_t position_cap) const;

    [[nodiscard]] const PairText& text() const noexcept { return text_; }
    [[nodiscard]] const SuffixOrder& order() const noexcept { return order_; }
    [[nodiscard]] const Trie& trie() const noexcept { return trie_; }
    [[nodiscard]] const MaxRunTable& max_run() const noexcept { return max_run_; }
    [[nodiscard]] const SigmaForest& sigma() const noexcept { return sigma_; }

    [[nodiscard]] std::size_t memory_bytes() const;

private:
    /// T_σ leaf for the suffix right after X run `run`.
    [[nodiscard]] SigmaForest::Location follower(std::size_t run) const;
    [[nodiscard]] u128 run_sum(std::size_t run, const SigmaTrie& st, NodeId w) const;

    PairText text_;
    SuffixOrder order_;
    Trie trie_;
    MaxRunTable max_run_;
    SigmaForest sigma_;
};

/// ACS(X, Y) by the per-run algorithm.
AcsResult acs(const RleSeq& x, const RleSeq& y);

/// ACS(X, X) = (x + 1) / 2: every suffix matches itself.
Rational acs_self(std::uint64_t x);

enum class LogBase { e, two, ten };

double log_in(LogBase base, double v);
const char* to_string(LogBase base);

struct DistResult {
    double dist = 0.0;
    LogBase log_base = LogBase::e;
    Rational acs_xy;
    Rational acs_yx;
    Rational acs_xx;
    Rational acs_yy;
};

/// Symmetric ACS distance. Requires both decoded lengths >= 2 and at least
/// one common symbol.
DistResult dist(const RleSeq& x, const RleSeq& y, LogBase base = LogBase::e);

}  // namespace rleacs
