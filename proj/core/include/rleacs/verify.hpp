#pragma once

#include <cstdint>
#include <string>

#include "rleacs/acs.hpp"
#include "rleacs/oracle.hpp"

namespace rleacs {

struct VerifyConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    std::uint64_t n_max = 500;
    oracle::OracleBudget budget{};
    EngineOptions engine{};
};

struct VerifyReport {
    std::size_t passed = 0;
    std::size_t total = 0;
    std::string failure;         // first failed check, empty when all passed
    std::string counterexample;  // both inputs in RLE text format

    [[nodiscard]] bool ok() const noexcept { return passed == total; }
};

// Each check returns an empty string on success or a description of the
// first violation.

/// Along every root-to-leaf path of every T_σ, freq never increases.
std::string check_freq_monotone(const SigmaForest& forest);
/// weight(v) equals the edge sum recomputed by walking v's root path.
std::string check_weight_telescoping(const SigmaForest& forest);
/// Internal strDepth equals the minimum dlcp over the node's leaf interval,
/// in T and in every T_σ (against the T leaf ranks).
std::string check_str_depth(const AcsEngine& engine);
/// Every annotated T leaf sits in exactly one T_σ.
std::string check_partition(const AcsEngine& engine);
/// The jump-pointer search agrees with a plain parent walk.
std::string check_ancestor_search(const SigmaForest& forest);
/// compute_A of the last run equals the closed forms f(f+1)/2 or m(f-(m-1)/2).
std::string check_last_run_closed_form(const AcsEngine& engine);

/// Runs every engine-versus-oracle and structural check on one pair.
std::string check_pair(const RleSeq& x, const RleSeq& y, const VerifyConfig& config);

/// Seeded random trials of check_pair; stops at the first failure.
VerifyReport run_verification(const VerifyConfig& config);

}  // namespace rleacs
