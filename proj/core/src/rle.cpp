#include "rleacs/rle.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace rleacs {

RleSeq::RleSeq(std::string name, std::vector<Run> runs) : name_(std::move(name)), runs_(std::move(runs)) {
    if (runs_.empty() || !Alphabet::is_sentinel(runs_.back().symbol) || runs_.back().length != 1)
        throw DataError(name_ + ": sequence must end in a length-1 sentinel run");
    if (runs_.size() == 1) throw DataError("empty sequence");
    for (std::size_t i = 0; i < runs_.size(); ++i) {
        const Run& r = runs_[i];
        if (r.length == 0) throw DataError(name_ + ": run of length 0");
        if (i + 1 < runs_.size() && Alphabet::is_sentinel(r.symbol)) throw DataError("reserved symbol");
        if (i > 0 && runs_[i - 1].symbol == r.symbol) throw DataError(name_ + ": runs are not maximal");
        if (r.length > kMaxDecodedLength - decoded_length_)
            throw DataError(name_ + ": decoded length exceeds 2^62");
        decoded_length_ += r.length;
    }
}

RleSeq RleSeq::with_sentinel(Symbol s) const {
    RleSeq copy = *this;
    copy.runs_.back().symbol = s;
    return copy;
}

RleSeq encode(std::string_view text, std::string name, Symbol sentinel) {
    if (text.empty()) throw DataError("empty sequence");
    std::vector<Run> runs;
    for (const char c : text) {
        if (Alphabet::is_reserved(c)) throw DataError("reserved symbol");
        const Symbol s = Alphabet::of(c);
        if (!runs.empty() && runs.back().symbol == s)
            ++runs.back().length;
        else
            runs.push_back({s, 1});
    }
    runs.push_back({sentinel, 1});
    return RleSeq(std::move(name), std::move(runs));
}

RleSeq from_runs(std::string name, std::vector<Run> runs, std::vector<std::string>* warnings, Symbol sentinel) {
    if (runs.empty()) throw DataError("empty sequence");
    std::vector<Run> merged;
    merged.reserve(runs.size() + 1);
    for (const Run& r : runs) {
        if (Alphabet::is_sentinel(r.symbol)) throw DataError("reserved symbol");
        if (r.length == 0) throw DataError(name + ": run of length 0");
        if (!merged.empty() && merged.back().symbol == r.symbol) {
            if (r.length > kMaxDecodedLength - merged.back().length)
                throw DataError(name + ": decoded length exceeds 2^62");
            merged.back().length += r.length;
            if (warnings != nullptr)
                warnings->push_back(name + ": merged adjacent runs of '" +
                                    std::string(1, Alphabet::to_char(r.symbol)) + "'");
        } else {
            merged.push_back(r);
        }
    }
    merged.push_back({sentinel, 1});
    return RleSeq(std::move(name), std::move(merged));
}

std::string decode(const RleSeq& seq, bool keep_sentinel, std::uint64_t limit) {
    const std::uint64_t n = keep_sentinel ? seq.decoded_length() : seq.text_length();
    if (n > limit) throw DataError("decode too large");
    std::string out;
    out.reserve(n);
    const auto& runs = seq.runs();
    const std::size_t count = keep_sentinel ? runs.size() : runs.size() - 1;
    for (std::size_t i = 0; i < count; ++i) out.append(runs[i].length, Alphabet::to_char(runs[i].symbol));
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::string header_name(std::string_view line, std::size_t lineno) {
    line.remove_prefix(1);
    line = trim(line);
    const auto end = line.find_first_of(" \t");
    std::string name(line.substr(0, end));
    if (name.empty()) throw ParseError(lineno, "record header without a name");
    return name;
}

/// Collects records and enforces unique names.
class RecordSink {
public:
    void add(RleSeq seq, std::size_t lineno) {
        if (!names_.insert(seq.name()).second) throw ParseError(lineno, "duplicate record name '" + seq.name() + "'");
        out_.sequences.push_back(std::move(seq));
    }
    std::vector<std::string>& warnings() { return out_.warnings; }
    ParsedInput take() { return std::move(out_); }

private:
    std::set<std::string> names_;
    ParsedInput out_;
};

}  // namespace

ParsedInput parse_rle_text(std::istream& in) {
    RecordSink sink;
    std::string name;
    std::size_t header_line = 0;
    std::vector<Run> runs;
    bool open = false;

    const auto flush = [&] {
        if (!open) return;
        if (runs.empty()) throw ParseError(header_line, "empty record " + name);
        sink.add(from_runs(name, std::move(runs), &sink.warnings()), header_line);
        runs.clear();
    };

    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const std::string_view body = trim(line);
        if (body.empty()) continue;
        if (body.front() == '>') {
            flush();
            name = header_name(body, lineno);
            header_line = lineno;
            open = true;
            continue;
        }
        if (!open) throw ParseError(lineno, "data before the first '>' header");

        std::istringstream tokens{std::string(body)};
        std::string tok;
        while (tokens >> tok) {
            const char sym = tok.front();
            if (std::isdigit(static_cast<unsigned char>(sym)) || !std::isprint(static_cast<unsigned char>(sym)))
                throw ParseError(lineno, "invalid symbol in token '" + tok + "'");
            const std::string_view digits = std::string_view(tok).substr(1);
            std::uint64_t count = 0;
            const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), count);
            if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
                throw ParseError(lineno, "invalid count in token '" + tok + "'");
            if (count == 0) throw ParseError(lineno, "count must be >= 1 in token '" + tok + "'");
            if (count >= kMaxDecodedLength) throw ParseError(lineno, "count too large in token '" + tok + "'");
            runs.push_back({Alphabet::of(sym), count});
        }
    }
    flush();
    return sink.take();
}

ParsedInput parse_fasta(std::istream& in) {
    RecordSink sink;
    std::string name;
    std::size_t header_line = 0;
    std::string text;
    bool open = false;

    const auto flush = [&] {
        if (!open) return;
        if (text.empty()) throw ParseError(header_line, "empty record " + name);
        try {
            sink.add(encode(text, name), header_line);
        } catch (const ParseError&) {
            throw;
        } catch (const DataError& e) {
            throw ParseError(header_line, name + ": " + e.what());
        }
        text.clear();
    };

    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const std::string_view body = trim(line);
        if (body.empty()) continue;
        if (body.front() == '>') {
            flush();
            name = header_name(body, lineno);
            header_line = lineno;
            open = true;
            continue;
        }
        if (!open) throw ParseError(lineno, "sequence data before the first '>' header");
        for (const char c : body)
            if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    }
    flush();
    return sink.take();
}

std::string format_rle_text(const RleSeq& seq) {
    std::string out = ">" + seq.name() + "\n";
    const auto& runs = seq.runs();
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out.push_back(Alphabet::to_char(runs[i].symbol));
        out += std::to_string(runs[i].length);
    }
    out.push_back('\n');
    return out;
}

}  // namespace rleacs
