#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rleacs/acs.hpp"

namespace rleacs::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kVerifyFailed = 3 };

enum class InputFormat { fasta, rle, text };
enum class OutputFormat { tsv, phylip };

struct RunConfig {
    std::vector<std::string> inputs;
    InputFormat format = InputFormat::fasta;
    LogBase log_base = LogBase::e;
    std::string out_path;  // empty: standard output
    OutputFormat output = OutputFormat::tsv;
    bool output_set = false;
    bool relaxed_names = false;
    unsigned threads = 1;

    // verify
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    std::uint64_t n_max = 500;
    bool inject_fault = false;

    // bench
    std::vector<std::size_t> sizes{1u << 14, 1u << 15, 1u << 16, 1u << 17};
    std::vector<std::uint64_t> scales{10, 1'000'000};
    std::size_t decouple_runs = 100'000;
    unsigned reps = 3;
};

/// Loads every input in order. Merge warnings go to `warn`.
std::vector<RleSeq> load_inputs(const RunConfig& config, std::ostream& warn);

void cmd_acs(const RunConfig& config, std::ostream& out, std::ostream& err);
void cmd_dist(const RunConfig& config, std::ostream& out, std::ostream& err);
void cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Returns false when a counterexample was found.
bool cmd_verify(const RunConfig& config, std::ostream& out);
void cmd_bench(const RunConfig& config, std::ostream& out);

/// Distances for every pair; entry (i, j) and (j, i) come from one
/// computation, the diagonal is 0.
std::vector<std::vector<double>> distance_matrix(const std::vector<RleSeq>& seqs, LogBase base, unsigned threads);

void write_phylip(const std::vector<std::string>& names, const std::vector<std::vector<double>>& d, bool relaxed_names,
                  std::ostream& out);
void write_matrix_tsv(const std::vector<std::string>& names, const std::vector<std::vector<double>>& d,
                      std::ostream& out);

struct PhylipMatrix {
    std::vector<std::string> names;
    std::vector<std::vector<double>> rows;
};

/// Minimal reader for square PHYLIP matrices with whitespace-separated names.
PhylipMatrix read_phylip(std::istream& in);

struct BenchRow {
    std::size_t runs = 0;  // N, both sequences and sentinels
    std::uint64_t scale = 0;
    std::uint64_t decoded = 0;  // x + y
    double build_seconds = 0;
    double query_seconds = 0;
    std::size_t structure_bytes = 0;
    AcsResult result;

    [[nodiscard]] double total_seconds() const { return build_seconds + query_seconds; }
};

/// Best-of-`reps` timing of ACS(X, Y) on bench_pair(runs / 2, scale, seed).
BenchRow measure(std::size_t runs, std::uint64_t scale, std::uint64_t seed, unsigned reps);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rleacs::cli
