#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "rleacs/corpus.hpp"
#include "rleacs/verify.hpp"

namespace rleacs::cli {

namespace {

std::string fixed(double v, int decimals) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(decimals) << v;
    return s.str();
}

std::string full(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

ParsedInput read_text_file(std::istream& in, const std::string& name) {
    std::string text;
    char c;
    while (in.get(c))
        if (c != '\n' && c != '\r') text.push_back(c);
    ParsedInput p;
    p.sequences.push_back(encode(text, name));
    return p;
}

ParsedInput read_one(std::istream& in, InputFormat format, const std::string& stem) {
    switch (format) {
        case InputFormat::rle: return parse_rle_text(in);
        case InputFormat::text: return read_text_file(in, stem);
        case InputFormat::fasta: break;
    }
    return parse_fasta(in);
}

std::pair<RleSeq, RleSeq> load_two(const RunConfig& config, std::ostream& err) {
    auto seqs = load_inputs(config, err);
    if (seqs.size() != 2)
        throw DataError("expected exactly two sequences, got " + std::to_string(seqs.size()));
    return {std::move(seqs[0]), std::move(seqs[1])};
}

/// Runs `body` with `out` or with the file named by --out.
template <typename Body>
void with_output(const RunConfig& config, std::ostream& out, Body&& body) {
    if (config.out_path.empty()) {
        body(out);
        return;
    }
    std::ofstream file(config.out_path);
    if (!file) throw DataError("cannot open " + config.out_path + " for writing");
    body(file);
    if (!file) throw DataError("failed writing " + config.out_path);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<RleSeq> load_inputs(const RunConfig& config, std::ostream& warn) {
    std::vector<RleSeq> all;
    std::set<std::string> names;
    for (const auto& path : config.inputs) {
        ParsedInput parsed;
        const std::string stem = path == "-" ? "stdin" : std::filesystem::path(path).stem().string();
        try {
            if (path == "-") {
                parsed = read_one(std::cin, config.format, stem);
            } else {
                std::ifstream in(path);
                if (!in) throw DataError("cannot open " + path);
                parsed = read_one(in, config.format, stem);
            }
        } catch (const DataError& e) {
            throw DataError(path + ": " + e.what());
        }
        for (const auto& w : parsed.warnings) warn << "warning: " << path << ": " << w << '\n';
        for (auto& s : parsed.sequences) {
            if (!names.insert(s.name()).second) throw DataError("duplicate sequence name '" + s.name() + "'");
            all.push_back(std::move(s));
        }
    }
    return all;
}

void cmd_acs(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto [x, y] = load_two(config, err);
    const AcsEngine engine(x, y);
    const AcsResult r = engine.acs();
    with_output(config, out, [&](std::ostream& o) {
        if (r.lsum == 0)
            o << "ACS = 0/" << r.x << " = 0\n";
        else
            o << "ACS = " << r.value().str() << " ≈ " << fixed(r.to_double(), 6) << '\n';
        o << "X\t" << x.name() << '\n'
          << "Y\t" << y.name() << '\n'
          << "N\t" << engine.total_runs() << '\n'
          << "x_runs\t" << engine.x_runs() << '\n'
          << "y_runs\t" << engine.y_runs() << '\n'
          << "x\t" << engine.x_length() << '\n'
          << "y\t" << engine.y_length() << '\n'
          << "lsum\t" << to_string(r.lsum) << '\n'
          << "acs\t" << full(r.to_double()) << '\n';
    });
}

void cmd_dist(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto [x, y] = load_two(config, err);
    const DistResult d = dist(x, y, config.log_base);
    with_output(config, out, [&](std::ostream& o) {
        o << "Dist = " << fixed(d.dist, 6) << '\n'
          << "X\t" << x.name() << '\n'
          << "Y\t" << y.name() << '\n'
          << "log_base\t" << to_string(d.log_base) << '\n'
          << "dist\t" << full(d.dist) << '\n'
          << "acs_xy\t" << d.acs_xy.str() << '\n'
          << "acs_yx\t" << d.acs_yx.str() << '\n'
          << "acs_xx\t" << d.acs_xx.str() << '\n'
          << "acs_yy\t" << d.acs_yy.str() << '\n';
    });
}

std::vector<std::vector<double>> distance_matrix(const std::vector<RleSeq>& seqs, LogBase base, unsigned threads) {
    const std::size_t n = seqs.size();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::string failure;
    std::size_t failure_index = pairs.size();
    const auto work = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < pairs.size();) {
            const auto [i, j] = pairs[k];
            try {
                const double v = dist(seqs[i], seqs[j], base).dist;
                d[i][j] = v;
                d[j][i] = v;
            } catch (const std::exception& e) {
                const std::lock_guard lock(failure_mutex);
                // Report the earliest failing pair so output is deterministic.
                if (k < failure_index) {
                    failure_index = k;
                    failure = "pair (" + seqs[i].name() + ", " + seqs[j].name() + "): " + e.what();
                }
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    if (!failure.empty()) throw DataError(failure);
    return d;
}

namespace {

void check_phylip_names(const std::vector<std::string>& names, bool relaxed_names) {
    if (relaxed_names) return;
    for (const auto& name : names)
        if (name.size() > 10) throw DataError("name '" + name + "' longer than 10 characters (use --relaxed-names)");
}

}  // namespace

void write_phylip(const std::vector<std::string>& names, const std::vector<std::vector<double>>& d, bool relaxed_names,
                  std::ostream& out) {
    check_phylip_names(names, relaxed_names);
    out << names.size() << '\n';
    for (std::size_t i = 0; i < names.size(); ++i) {
        out << names[i];
        if (names[i].size() < 10) out << std::string(10 - names[i].size(), ' ');
        for (std::size_t j = 0; j < names.size(); ++j) out << ' ' << (i == j ? "0.000000" : fixed(d[i][j], 6));
        out << '\n';
    }
}

void write_matrix_tsv(const std::vector<std::string>& names, const std::vector<std::vector<double>>& d,
                      std::ostream& out) {
    for (const auto& name : names) out << '\t' << name;
    out << '\n';
    for (std::size_t i = 0; i < names.size(); ++i) {
        out << names[i];
        for (std::size_t j = 0; j < names.size(); ++j) out << '\t' << (i == j ? "0.000000" : fixed(d[i][j], 6));
        out << '\n';
    }
}

PhylipMatrix read_phylip(std::istream& in) {
    PhylipMatrix m;
    std::size_t n = 0;
    if (!(in >> n)) throw DataError("phylip: missing taxon count");
    for (std::size_t i = 0; i < n; ++i) {
        std::string name;
        if (!(in >> name)) throw DataError("phylip: missing row " + std::to_string(i + 1));
        std::vector<double> row(n);
        for (auto& v : row)
            if (!(in >> v)) throw DataError("phylip: short row for " + name);
        m.names.push_back(std::move(name));
        m.rows.push_back(std::move(row));
    }
    std::string extra;
    if (in >> extra) throw DataError("phylip: trailing data");
    return m;
}

void cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto seqs = load_inputs(config, err);
    if (seqs.size() < 2) throw DataError("matrix needs at least two sequences");
    std::vector<std::string> names;
    for (const auto& s : seqs) names.push_back(s.name());
    const OutputFormat format = config.output_set ? config.output : OutputFormat::phylip;
    if (format == OutputFormat::phylip) check_phylip_names(names, config.relaxed_names);
    const auto d = distance_matrix(seqs, config.log_base, config.threads);
    with_output(config, out, [&](std::ostream& o) {
        if (format == OutputFormat::phylip)
            write_phylip(names, d, config.relaxed_names, o);
        else
            write_matrix_tsv(names, d, o);
    });
}

bool cmd_verify(const RunConfig& config, std::ostream& out) {
    VerifyConfig vc;
    vc.seed = config.seed;
    vc.trials = config.trials;
    vc.n_max = config.n_max;
    vc.budget.max_length = std::max<std::uint64_t>(vc.budget.max_length, config.n_max);
    vc.budget.max_product = std::max<std::uint64_t>(vc.budget.max_product, config.n_max * config.n_max);
    if (config.inject_fault) vc.engine.freq_aggregate = FreqAggregate::min;
    const VerifyReport r = run_verification(vc);
    if (r.ok()) {
        out << r.passed << '/' << r.total << " ok\n";
        return true;
    }
    out << r.passed << '/' << r.total << " passed before failure\n"
        << "FAILED " << r.failure << '\n'
        << "counterexample:\n"
        << r.counterexample;
    return false;
}

BenchRow measure(std::size_t runs, std::uint64_t scale, std::uint64_t seed, unsigned reps) {
    const auto [x, y] = bench_pair(std::max<std::size_t>(1, runs / 2), scale, seed);
    BenchRow row;
    row.scale = scale;
    row.decoded = x.text_length() + y.text_length();
    for (unsigned r = 0; r < std::max(1u, reps); ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const AcsEngine engine(x, y);
        const double build = seconds_since(t0);
        const auto t1 = std::chrono::steady_clock::now();
        row.result = engine.acs();
        const double query = seconds_since(t1);
        if (r == 0 || build + query < row.total_seconds()) {
            row.build_seconds = build;
            row.query_seconds = query;
        }
        row.runs = engine.total_runs();
        row.structure_bytes = engine.memory_bytes();
    }
    return row;
}

void cmd_bench(const RunConfig& config, std::ostream& out) {
    const auto ms = [](double s) { return fixed(s * 1e3, 3); };
    const auto header = [&] { out << "N\tscale\tdecoded\tbuild_ms\tquery_ms\ttotal_ms\tbytes\tratio\n"; };
    const auto print = [&](const BenchRow& r, const BenchRow* prev) {
        out << r.runs << '\t' << r.scale << '\t' << r.decoded << '\t' << ms(r.build_seconds) << '\t'
            << ms(r.query_seconds) << '\t' << ms(r.total_seconds()) << '\t' << r.structure_bytes << '\t'
            << (prev ? fixed(r.total_seconds() / prev->total_seconds(), 3) : std::string("-")) << '\n';
    };

    for (const std::uint64_t scale : config.scales) {
        out << "# N sweep, run lengths (1..10) x " << std::max<std::uint64_t>(1, scale / 10) << '\n';
        header();
        std::unique_ptr<BenchRow> prev;
        for (const std::size_t n : config.sizes) {
            auto row = std::make_unique<BenchRow>(measure(n, scale, config.seed, config.reps));
            print(*row, prev.get());
            prev = std::move(row);
        }
    }

    out << "# fixed N = " << config.decouple_runs << ", run-length scale sweep\n";
    header();
    std::unique_ptr<BenchRow> base;
    for (const std::uint64_t scale : {10ull, 1'000ull, 1'000'000ull}) {
        auto row = std::make_unique<BenchRow>(measure(config.decouple_runs, scale, config.seed, config.reps));
        print(*row, base.get());
        if (!base) base = std::move(row);
    }

    out << "# unary pair (a,10^9) vs (a,10^6)\n";
    const RleSeq x = from_runs("x", {{Alphabet::of('a'), 1'000'000'000}});
    const RleSeq y = from_runs("y", {{Alphabet::of('a'), 1'000'000}});
    const auto t0 = std::chrono::steady_clock::now();
    const AcsResult r = acs(x, y);
    const double secs = seconds_since(t0);
    const u128 m = 1'000'000, n = 1'000'000'000;
    const Rational closed{m * (n - m) + m * (m + 1) / 2, 1'000'000'000};
    out << "ACS = " << r.value().str() << "\tclosed_form = " << closed.str() << "\tmatch = "
        << (r.value().num == closed.num && r.value().den == closed.den ? "yes" : "no") << "\tms = " << ms(secs)
        << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Average common substring of run-length encoded sequences", "rleacs"};
    app.require_subcommand(1);

    const std::map<std::string, InputFormat> formats{
        {"fasta", InputFormat::fasta}, {"rle", InputFormat::rle}, {"text", InputFormat::text}};
    const std::map<std::string, LogBase> bases{{"e", LogBase::e}, {"2", LogBase::two}, {"10", LogBase::ten}};
    const std::map<std::string, OutputFormat> outputs{{"tsv", OutputFormat::tsv}, {"phylip", OutputFormat::phylip}};

    const auto add_inputs = [&](CLI::App* sub) {
        sub->add_option("inputs", config.inputs, "Input files ('-' for stdin)")->required();
        sub->add_option("--format", config.format, "Input format: fasta, rle or text")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out", config.out_path, "Write the report to this file");
    };
    const auto add_log_base = [&](CLI::App* sub) {
        sub->add_option("--log-base", config.log_base, "Logarithm base: e, 2 or 10")
            ->transform(CLI::CheckedTransformer(bases));
    };

    CLI::App* acs_cmd = app.add_subcommand("acs", "ACS(X, Y) for two sequences");
    add_inputs(acs_cmd);

    CLI::App* dist_cmd = app.add_subcommand("dist", "Symmetric ACS distance of two sequences");
    add_inputs(dist_cmd);
    add_log_base(dist_cmd);

    CLI::App* matrix_cmd = app.add_subcommand("matrix", "Pairwise distance matrix");
    add_inputs(matrix_cmd);
    add_log_base(matrix_cmd);
    matrix_cmd->add_option("--output", config.output, "Matrix format: phylip (default) or tsv")
        ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case))
        ->each([&](const std::string&) { config.output_set = true; });
    matrix_cmd->add_option("--threads", config.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
    matrix_cmd->add_flag("--relaxed-names", config.relaxed_names, "Allow names over 10 characters (nonstandard)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Check the engine against brute force on random inputs");
    verify_cmd->add_option("--seed", config.seed, "Random seed");
    verify_cmd->add_option("--trials", config.trials, "Number of random pairs");
    verify_cmd->add_option("--n-max", config.n_max, "Maximum decoded length per sequence")->check(CLI::Range(1, 1 << 16));
    verify_cmd->add_flag("--inject-fault", config.inject_fault, "Aggregate freq by min to exercise failure reporting");

    CLI::App* bench_cmd = app.add_subcommand("bench", "Timing sweeps over compressed and decoded size");
    bench_cmd->add_option("--sizes", config.sizes, "Run counts N for the sweep");
    bench_cmd->add_option("--scales", config.scales, "Run-length scales for the sweep");
    bench_cmd->add_option("--reps", config.reps, "Repetitions per row (best is reported)");
    bench_cmd->add_option("--seed", config.seed, "Random seed");
    bench_cmd->add_option("--fixed-n", config.decouple_runs, "N for the run-length sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*acs_cmd) cmd_acs(config, out, err);
        if (*dist_cmd) cmd_dist(config, out, err);
        if (*matrix_cmd) cmd_matrix(config, out, err);
        if (*verify_cmd && !cmd_verify(config, out)) return kVerifyFailed;
        if (*bench_cmd) cmd_bench(config, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kOk;
}

}  // namespace rleacs::cli
