#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rleacs;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("rleacs_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& content) {
        const auto p = dir_ / name;
        std::ofstream(p) << content;
        return p.string();
    }

    int run(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        args.insert(args.begin(), "rleacs");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        return cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
    }

    std::string first_line() const { return out_.str().substr(0, out_.str().find('\n')); }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

}  // namespace

TEST_F(CliTest, acs_reports_exact_rational) {
    const auto x = file("x.fa", ">x\naab\n");
    const auto y = file("y.fa", ">y\nab\n");
    ASSERT_EQ(run({"acs", x, y}), cli::kOk) << err_.str();
    EXPECT_EQ(first_line(), "ACS = 4/3 ≈ 1.333333");
    EXPECT_NE(out_.str().find("N\t6\n"), std::string::npos);
    EXPECT_NE(out_.str().find("x_runs\t2\n"), std::string::npos);
    EXPECT_NE(out_.str().find("lsum\t4\n"), std::string::npos);
}

TEST_F(CliTest, acs_identical_and_disjoint) {
    const auto both = file("both.fa", ">a\nabbab\n>b\nabbab\n");
    ASSERT_EQ(run({"acs", both}), cli::kOk);
    EXPECT_EQ(first_line(), "ACS = 15/5 ≈ 3.000000");  // (5 + 1) / 2
    const auto disjoint = file("d.fa", ">a\naab\n>b\ncd\n");
    ASSERT_EQ(run({"acs", disjoint}), cli::kOk);
    EXPECT_EQ(first_line(), "ACS = 0/3 = 0");
}

TEST_F(CliTest, rle_and_text_inputs) {
    const auto rle = file("p.rle", ">x\na2 b1\n>y\na1 b1\n");
    ASSERT_EQ(run({"acs", "--format", "rle", rle}), cli::kOk);
    EXPECT_EQ(first_line(), "ACS = 4/3 ≈ 1.333333");
    const auto x = file("x.txt", "aab\n");
    const auto y = file("y.txt", "ab\n");
    ASSERT_EQ(run({"acs", "--format", "text", x, y}), cli::kOk);
    EXPECT_EQ(first_line(), "ACS = 4/3 ≈ 1.333333");
    EXPECT_NE(out_.str().find("X\tx\n"), std::string::npos);
}

TEST_F(CliTest, merge_warning_goes_to_stderr) {
    const auto rle = file("p.rle", ">x\na1 a1 b1\n>y\nab1\n");
    EXPECT_EQ(run({"acs", "--format", "rle", rle}), cli::kDataError);
    const auto ok = file("q.rle", ">x\na1 a1 b1\n>y\na1 b1\n");
    ASSERT_EQ(run({"acs", "--format", "rle", ok}), cli::kOk);
    EXPECT_NE(err_.str().find("warning"), std::string::npos);
}

TEST_F(CliTest, dist_worked_example) {
    const auto p = file("p.fa", ">x\naab\n>y\nab\n");
    ASSERT_EQ(run({"dist", p}), cli::kOk) << err_.str();
    EXPECT_EQ(first_line(), "Dist = 0.120432");
    EXPECT_NE(out_.str().find("acs_xy\t4/3\n"), std::string::npos);
    EXPECT_NE(out_.str().find("log_base\te\n"), std::string::npos);
    ASSERT_EQ(run({"dist", "--log-base", "2", p}), cli::kOk);
    EXPECT_NE(out_.str().find("log_base\t2\n"), std::string::npos);
}

TEST_F(CliTest, dist_errors_are_data_errors) {
    const auto short_seq = file("s.fa", ">x\na\n>y\nab\n");
    EXPECT_EQ(run({"dist", short_seq}), cli::kDataError);
    EXPECT_NE(err_.str().find("sequence too short"), std::string::npos);
    const auto disjoint = file("d.fa", ">x\naa\n>y\nbb\n");
    EXPECT_EQ(run({"dist", disjoint}), cli::kDataError);
    EXPECT_NE(err_.str().find("no common substring"), std::string::npos);
}

TEST_F(CliTest, matrix_phylip) {
    const auto p = file("p.fa", ">x\naab\n>y\nab\n");
    ASSERT_EQ(run({"matrix", p}), cli::kOk) << err_.str();
    EXPECT_EQ(out_.str(),
              "2\n"
              "x          0.000000 0.120432\n"
              "y          0.120432 0.000000\n");
}

TEST_F(CliTest, matrix_is_symmetric_and_deterministic_across_threads) {
    const auto p = file("p.fa", ">s1\nAACGTTTGCA\n>s2\nACGTTGCAAA\n>s3\nTTTTGGCAAC\n>s4\nGGGACGTAAC\n");
    ASSERT_EQ(run({"matrix", "--threads", "1", p}), cli::kOk);
    const std::string serial = out_.str();
    ASSERT_EQ(run({"matrix", "--threads", "4", p}), cli::kOk);
    EXPECT_EQ(out_.str(), serial);

    std::istringstream in(serial);
    const auto m = cli::read_phylip(in);
    ASSERT_EQ(m.names, (std::vector<std::string>{"s1", "s2", "s3", "s4"}));
    for (std::size_t i = 0; i < 4; ++i) {
        ASSERT_EQ(m.rows[i].size(), 4u);
        EXPECT_EQ(m.rows[i][i], 0.0);
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(m.rows[i][j], m.rows[j][i]);
    }
}

TEST_F(CliTest, matrix_tsv_and_out_file) {
    const auto p = file("p.fa", ">x\naab\n>y\nab\n");
    const auto out = (dir_ / "m.tsv").string();
    ASSERT_EQ(run({"matrix", "--output", "tsv", "--out", out, p}), cli::kOk);
    std::ifstream in(out);
    std::stringstream s;
    s << in.rdbuf();
    EXPECT_EQ(s.str(), "\tx\ty\nx\t0.000000\t0.120432\ny\t0.120432\t0.000000\n");
}

TEST_F(CliTest, matrix_names) {
    const auto p = file("p.fa", ">a_very_long_name\naab\n>y\nab\n");
    EXPECT_EQ(run({"matrix", p}), cli::kDataError);
    ASSERT_EQ(run({"matrix", "--relaxed-names", p}), cli::kOk);
    EXPECT_NE(out_.str().find("a_very_long_name 0.000000"), std::string::npos);
    const auto a = file("a.fa", ">x\naab\n");
    const auto b = file("b.fa", ">x\nab\n");
    EXPECT_EQ(run({"matrix", a, b}), cli::kDataError);
    EXPECT_NE(err_.str().find("duplicate"), std::string::npos);
}

TEST_F(CliTest, matrix_names_failing_pair) {
    const auto p = file("p.fa", ">x\naab\n>y\nab\n>z\ncc\n");
    EXPECT_EQ(run({"matrix", p}), cli::kDataError);
    EXPECT_NE(err_.str().find("pair (x, z)"), std::string::npos);
}

TEST_F(CliTest, verify) {
    ASSERT_EQ(run({"verify", "--trials", "0"}), cli::kOk);
    EXPECT_EQ(out_.str(), "0/0 ok\n");
    ASSERT_EQ(run({"verify", "--seed", "42", "--trials", "60", "--n-max", "200"}), cli::kOk);
    EXPECT_EQ(out_.str(), "60/60 ok\n");
    ASSERT_EQ(run({"verify", "--trials", "60", "--n-max", "200", "--inject-fault"}), cli::kVerifyFailed);
    EXPECT_NE(out_.str().find("counterexample:\n>X"), std::string::npos);
}

TEST_F(CliTest, usage_and_data_exit_codes) {
    EXPECT_EQ(run({}), cli::kUsage);
    EXPECT_EQ(run({"acs"}), cli::kUsage);
    EXPECT_EQ(run({"dist", "--log-base", "3", "x"}), cli::kUsage);
    EXPECT_EQ(run({"acs", (dir_ / "missing.fa").string(), "y"}), cli::kDataError);
    const auto bad = file("bad.rle", ">x\na0\n");
    EXPECT_EQ(run({"acs", "--format", "rle", bad, bad}), cli::kDataError);
    EXPECT_NE(err_.str().find("line 2"), std::string::npos);
    const auto one = file("one.fa", ">x\naab\n");
    EXPECT_EQ(run({"acs", one}), cli::kDataError);
    EXPECT_EQ(run({"--help"}), cli::kOk);
}

TEST_F(CliTest, bench_small_sweep) {
    ASSERT_EQ(run({"bench", "--sizes", "256", "512", "--scales", "10", "--fixed-n", "1000", "--reps", "1"}), cli::kOk);
    const std::string s = out_.str();
    EXPECT_NE(s.find("# N sweep"), std::string::npos);
    EXPECT_NE(s.find("# fixed N = 1000"), std::string::npos);
    EXPECT_NE(s.find("match = yes"), std::string::npos);
}
