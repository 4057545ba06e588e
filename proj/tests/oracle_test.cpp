#include "rleacs/oracle.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace rleacs;
using rleacs::testing::seq;

TEST(BruteL, small_cases) {
    EXPECT_EQ(oracle::brute_L("aab", "ab"), (std::vector<std::uint64_t>{1, 2, 1}));
    EXPECT_EQ(oracle::brute_L("b", "a"), (std::vector<std::uint64_t>{0}));
    EXPECT_EQ(oracle::brute_L("aa", "aa"), (std::vector<std::uint64_t>{2, 1}));
}

TEST(BruteAcs, exact_rationals) {
    EXPECT_EQ(oracle::brute_acs("aab", "ab"), (Rational{4, 3}));
    EXPECT_EQ(oracle::brute_acs(std::string(9, 'a'), "aaa"), (Rational{8, 3}));
    EXPECT_EQ(oracle::brute_acs("abcab", "abcab"), (Rational{3, 1}));
}

TEST(BruteSuffixSort, worked_example) {
    const SuffixOrder o = oracle::brute_suffix_sort(seq("aab"), seq("ab"));
    EXPECT_EQ(o.order, (std::vector<std::uint32_t>{2, 5, 0, 3, 1, 4}));
    EXPECT_EQ(o.dlcp, (std::vector<std::uint64_t>{0, 0, 1, 0, 1}));
}

TEST(BruteSuffixSort, single_runs_put_sentinels_first) {
    const SuffixOrder o = oracle::brute_suffix_sort(seq("a"), seq("b"));
    EXPECT_EQ(o.order, (std::vector<std::uint32_t>{1, 3, 0, 2}));
}

TEST(BruteSuffixSort, equal_content_pairs_x_before_y) {
    const SuffixOrder o = oracle::brute_suffix_sort(seq("abba"), seq("abba"));
    for (std::size_t k = 0; k < o.order.size(); k += 2) EXPECT_EQ(o.order[k + 1], o.order[k] + 4);
}

TEST(Oracle, budget_is_checked_before_work) {
    const std::string big(2001, 'a');
    EXPECT_THROW(oracle::brute_L(big, "a"), DataError);
    EXPECT_THROW(oracle::brute_L("ab", "ab", {.max_length = 10, .max_product = 3}), DataError);
    EXPECT_THROW(oracle::brute_suffix_sort(seq(big), seq("a")), DataError);
    EXPECT_NO_THROW(oracle::brute_L(big, "a", {.max_length = 5000, .max_product = 10'000}));
}
