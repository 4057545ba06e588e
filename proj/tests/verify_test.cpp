#include "rleacs/verify.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace rleacs;

TEST(Verify, seeded_trials_pass) {
    const VerifyReport r = run_verification({.seed = 42, .trials = 200, .n_max = 300});
    EXPECT_TRUE(r.ok()) << r.failure << "\n" << r.counterexample;
    EXPECT_EQ(r.passed, 200u);
}

TEST(Verify, zero_trials) {
    const VerifyReport r = run_verification({.trials = 0});
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.total, 0u);
}

TEST(Verify, injected_fault_yields_parseable_counterexample) {
    VerifyConfig config{.seed = 42, .trials = 200, .n_max = 300};
    config.engine.freq_aggregate = FreqAggregate::min;
    const VerifyReport r = run_verification(config);
    ASSERT_FALSE(r.ok());
    EXPECT_FALSE(r.failure.empty());
    std::istringstream in(r.counterexample);
    const auto parsed = parse_rle_text(in);
    ASSERT_EQ(parsed.sequences.size(), 2u);
    // Reproduces on the reported pair alone.
    EXPECT_FALSE(check_pair(parsed.sequences[0], parsed.sequences[1], config).empty());
}
