#include "rleacs/acs.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rleacs/oracle.hpp"
#include "test_util.hpp"

using namespace rleacs;
using rleacs::testing::seq;

TEST(ComputeA, worked_example) {
    const AcsEngine e(seq("aab"), seq("ab"));
    ASSERT_EQ(e.x_runs(), 2u);
    EXPECT_EQ(e.compute_A(0), u128{3});  // f = 2 > m = 1
    EXPECT_EQ(e.compute_A(1), u128{1});  // last run, f = m = 1
    EXPECT_EQ(e.total_runs(), 6u);
}

TEST(ComputeA, symbol_missing_from_y_contributes_nothing) {
    const AcsEngine e(seq("aazb"), seq("ab"));
    EXPECT_EQ(e.compute_A(1), u128{0});
    const auto l = e.compute_L_per_position(100);
    EXPECT_EQ(l[2], 0u);
}

TEST(Acs, worked_example) {
    const AcsResult r = acs(seq("aab"), seq("ab"));
    EXPECT_EQ(r.lsum, u128{4});
    EXPECT_EQ(r.x, 3u);
    EXPECT_EQ(r.value(), (Rational{4, 3}));
    EXPECT_EQ(acs(seq("ab"), seq("aab")).value(), (Rational{3, 2}));
}

TEST(Acs, unary_closed_form) {
    const AcsResult r = acs(seq(std::string(9, 'a')), seq("aaa"));
    EXPECT_EQ(r.lsum, u128{24});
    EXPECT_EQ(r.value(), (Rational{8, 3}));
}

TEST(Acs, unary_giant_pair_stays_compressed) {
    const RleSeq x = from_runs("x", {{Alphabet::of('a'), 1'000'000'000}});
    const RleSeq y = from_runs("y", {{Alphabet::of('a'), 1'000'000}});
    const AcsResult r = acs(x, y);
    const u128 m = 1'000'000, n = 1'000'000'000;
    EXPECT_EQ(r.lsum, m * (n - m) + m * (m + 1) / 2);
    EXPECT_EQ(r.x, 1'000'000'000u);
}

TEST(Acs, self_match_gives_half_length_plus_half) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        const RleSeq x = random_rle(rng, verification_params(static_cast<std::size_t>(t), 500), "x");
        EXPECT_EQ(acs(x, x).value(), acs_self(x.text_length()));
    }
    EXPECT_EQ(acs_self(3), (Rational{2, 1}));
    EXPECT_EQ(acs_self(1), (Rational{1, 1}));
    EXPECT_EQ(acs_self(2), (Rational{3, 2}));
}

TEST(Acs, disjoint_alphabets) {
    const AcsResult r = acs(seq("aaab"), seq("cd"));
    EXPECT_EQ(r.lsum, u128{0});
}

TEST(LPerPosition, worked_examples) {
    EXPECT_EQ(AcsEngine(seq("aab"), seq("ab")).compute_L_per_position(100), (std::vector<std::uint64_t>{1, 2, 1}));
    EXPECT_EQ(AcsEngine(seq(std::string(9, 'a')), seq("aaa")).compute_L_per_position(100),
              (std::vector<std::uint64_t>{3, 3, 3, 3, 3, 3, 3, 2, 1}));
}

TEST(LPerPosition, cap_is_enforced) {
    const AcsEngine e(seq(std::string(50, 'a')), seq("a"));
    try {
        (void)e.compute_L_per_position(10);
        FAIL();
    } catch (const DataError& err) {
        EXPECT_STREQ(err.what(), "decoded length over validation cap");
    }
}

TEST(Acs, appending_to_y_never_decreases_lsum) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        const auto params = verification_params(static_cast<std::size_t>(t), 300);
        const std::string x = decode(random_rle(rng, params, "x"));
        std::string y = decode(random_rle(rng, params, "y"));
        u128 prev = acs(seq(x), seq(y)).lsum;
        for (int k = 0; k < 3; ++k) {
            y += decode(random_rle(rng, params, "tail"));
            const u128 next = acs(seq(x), seq(y)).lsum;
            EXPECT_GE(next, prev);
            prev = next;
        }
    }
}

TEST(Dist, worked_example_natural_log) {
    const DistResult d = dist(seq("aab"), seq("ab"));
    const double expected = 0.5 * (std::log(2.0) / (4.0 / 3.0) + std::log(3.0) / 1.5) -
                            0.5 * (std::log(3.0) / 2.0 + std::log(2.0) / 1.5);
    EXPECT_NEAR(d.dist, expected, 1e-12);
    EXPECT_NEAR(d.dist, 0.120432, 1e-6);
    EXPECT_EQ(d.acs_xy, (Rational{4, 3}));
    EXPECT_EQ(d.acs_yx, (Rational{3, 2}));
    EXPECT_EQ(d.acs_xx, (Rational{2, 1}));
    EXPECT_EQ(d.acs_yy, (Rational{3, 2}));
}

TEST(Dist, log_base_rescales_uniformly) {
    const double e = dist(seq("aabab"), seq("abba")).dist;
    EXPECT_NEAR(dist(seq("aabab"), seq("abba"), LogBase::two).dist, e / std::log(2.0), 1e-12);
    EXPECT_NEAR(dist(seq("aabab"), seq("abba"), LogBase::ten).dist, e / std::log(10.0), 1e-12);
}

TEST(Dist, identity_and_symmetry_are_exact) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
        const auto params = verification_params(static_cast<std::size_t>(t), 400);
        const RleSeq x = random_rle(rng, params, "x");
        const RleSeq y = random_rle(rng, params, "y");
        if (x.text_length() < 2 || y.text_length() < 2) continue;
        EXPECT_EQ(dist(x, x).dist, 0.0);
        if (acs(x, y).lsum == 0) continue;
        EXPECT_EQ(dist(x, y).dist, dist(y, x).dist);
    }
}

TEST(Dist, errors) {
    try {
        (void)dist(seq("a"), seq("ab"));
        FAIL();
    } catch (const DataError& e) {
        EXPECT_STREQ(e.what(), "sequence too short");
    }
    try {
        (void)dist(seq("aa"), seq("bb"));
        FAIL();
    } catch (const DataError& e) {
        EXPECT_STREQ(e.what(), "no common substring");
    }
}

TEST(Acs, huge_runs_use_exact_128_bit_sums) {
    const std::uint64_t big = std::uint64_t{1} << 61;
    const RleSeq x = from_runs("x", {{Alphabet::of('a'), big}, {Alphabet::of('b'), 3}});
    const RleSeq y = from_runs("y", {{Alphabet::of('a'), big}, {Alphabet::of('b'), 3}});
    const AcsResult r = acs(x, y);
    EXPECT_EQ(r.value(), acs_self(x.text_length()));
}
