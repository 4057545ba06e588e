#include "rleacs/suffix_order.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

namespace rleacs {

PairText::PairText(const RleSeq& x, const RleSeq& y) : x_runs_(x.run_count()) {
    const std::size_t n = x.run_count() + y.run_count();
    if (n >= std::numeric_limits<std::uint32_t>::max()) throw DataError("too many runs in sequence pair");
    symbols_.reserve(n);
    cum_.reserve(n + 1);
    cum_.push_back(0);
    const auto append = [this](const RleSeq& s, Symbol sentinel) {
        for (std::size_t i = 0; i + 1 < s.run_count(); ++i) {
            symbols_.push_back(s.runs()[i].symbol);
            cum_.push_back(cum_.back() + s.runs()[i].length);
        }
        symbols_.push_back(sentinel);
        cum_.push_back(cum_.back() + 1);
    };
    append(x, Alphabet::sentinel(0));
    append(y, Alphabet::sentinel(1));
}

MetaSuffixId PairText::id(std::size_t pos) const {
    if (pos < x_runs_) return {Side::x, static_cast<std::uint32_t>(pos)};
    return {Side::y, static_cast<std::uint32_t>(pos - x_runs_)};
}

std::size_t PairText::pos(MetaSuffixId id) const {
    return id.side == Side::x ? id.run : x_runs_ + id.run;
}

std::uint64_t PairText::suffix_length(std::size_t pos) const {
    const std::size_t end = pos < x_runs_ ? x_runs_ : size();
    return cum_[end] - cum_[pos];
}

std::strong_ordering decoded_compare(const PairText& text, std::size_t a, std::size_t b) {
    while (true) {
        const Symbol ca = text.symbol(a);
        const Symbol cb = text.symbol(b);
        if (ca != cb) return ca <=> cb;
        // Sentinels are unique per sequence, so equal sentinels mean a == b.
        if (Alphabet::is_sentinel(ca)) return std::strong_ordering::equal;
        const std::uint64_t fa = text.length(a);
        const std::uint64_t fb = text.length(b);
        // The shorter run is followed by a different symbol; that symbol
        // meets another copy of the run symbol in the longer run.
        if (fa < fb) return text.symbol(a + 1) <=> ca;
        if (fb < fa) return cb <=> text.symbol(b + 1);
        ++a;
        ++b;
    }
}

std::uint64_t decoded_lcp(const PairText& text, std::size_t a, std::size_t b) {
    std::uint64_t lcp = 0;
    while (true) {
        if (text.symbol(a) != text.symbol(b)) return lcp;
        if (a == b && text.is_sentinel_run(a)) return lcp + 1;
        const std::uint64_t fa = text.length(a);
        const std::uint64_t fb = text.length(b);
        if (fa != fb) return lcp + std::min(fa, fb);
        lcp += fa;
        ++a;
        ++b;
    }
}

namespace {

/// Ranks the runs so that comparing two single tokens agrees with comparing
/// the decoded text they start. For runs of the same symbol c, a run
/// followed by a smaller symbol sorts shorter-first and before any run
/// followed by a larger symbol, which sorts longer-first.
std::vector<std::uint32_t> rank_tokens(const PairText& text, std::vector<std::uint32_t>& sa) {
    using Key = std::tuple<std::uint8_t, std::uint8_t, std::int64_t, std::uint8_t>;
    const std::size_t n = text.size();
    std::vector<Key> keys(n);
    for (std::size_t p = 0; p < n; ++p) {
        const auto c = static_cast<std::uint8_t>(text.symbol(p));
        if (text.is_sentinel_run(p)) {
            keys[p] = {c, 0, 0, 0};
            continue;
        }
        const auto next = static_cast<std::uint8_t>(text.symbol(p + 1));
        const auto len = static_cast<std::int64_t>(text.length(p));
        keys[p] = next < c ? Key{c, 0, len, next} : Key{c, 1, -len, next};
    }
    sa.resize(n);
    std::iota(sa.begin(), sa.end(), 0u);
    std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
    std::vector<std::uint32_t> rank(n);
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && keys[sa[i]] != keys[sa[i - 1]]) ++r;
        rank[sa[i]] = r;
    }
    return rank;
}

/// Prefix doubling with two-pass counting sort per round.
void prefix_doubling(std::vector<std::uint32_t>& sa, std::vector<std::uint32_t> rank) {
    const std::size_t n = sa.size();
    std::vector<std::uint32_t> by_second(n);
    std::vector<std::uint32_t> next_rank(n);
    std::vector<std::uint32_t> count;
    std::uint32_t max_rank = n == 0 ? 0 : rank[sa[n - 1]];
    for (std::size_t k = 1; max_rank + 1 < n; k <<= 1) {
        std::size_t j = 0;
        for (std::size_t p = n - std::min(k, n); p < n; ++p) by_second[j++] = static_cast<std::uint32_t>(p);
        for (std::size_t i = 0; i < n; ++i)
            if (sa[i] >= k) by_second[j++] = static_cast<std::uint32_t>(sa[i] - k);

        count.assign(max_rank + 2, 0);
        for (std::size_t p = 0; p < n; ++p) ++count[rank[p] + 1];
        for (std::size_t r = 1; r < count.size(); ++r) count[r] += count[r - 1];
        for (std::size_t i = 0; i < n; ++i) sa[count[rank[by_second[i]]]++] = by_second[i];

        const auto second = [&](std::uint32_t p) -> std::int64_t { return p + k < n ? rank[p + k] : -1; };
        next_rank[sa[0]] = 0;
        for (std::size_t i = 1; i < n; ++i) {
            const std::uint32_t a = sa[i - 1];
            const std::uint32_t b = sa[i];
            const bool differs = rank[a] != rank[b] || second(a) != second(b);
            next_rank[b] = next_rank[a] + (differs ? 1 : 0);
        }
        rank.swap(next_rank);
        max_rank = rank[sa[n - 1]];
    }
}

}  // namespace

SuffixOrder build_suffix_order(const PairText& text) {
    const std::size_t n = text.size();
    SuffixOrder out;
    const std::vector<std::uint32_t> token = rank_tokens(text, out.order);
    prefix_doubling(out.order, token);

    // Kasai over the token string gives the LCP in whole runs.
    std::vector<std::uint32_t> inverse(n);
    for (std::size_t i = 0; i < n; ++i) inverse[out.order[i]] = static_cast<std::uint32_t>(i);
    std::vector<std::uint32_t> meta(n > 0 ? n - 1 : 0);
    std::size_t h = 0;
    for (std::size_t p = 0; p < n; ++p) {
        if (inverse[p] == 0) {
            h = 0;
            continue;
        }
        const std::size_t q = out.order[inverse[p] - 1];
        while (p + h < n && q + h < n && token[p + h] == token[q + h]) ++h;
        meta[inverse[p] - 1] = static_cast<std::uint32_t>(h);
        if (h > 0) --h;
    }

    // Whole runs contribute their length; the first differing run adds the
    // shorter length when it repeats the same symbol.
    out.dlcp.resize(meta.size());
    for (std::size_t k = 0; k < meta.size(); ++k) {
        const std::size_t a = out.order[k];
        const std::size_t b = out.order[k + 1];
        const std::size_t m = meta[k];
        std::uint64_t d = text.span_length(a, m);
        if (text.symbol(a + m) == text.symbol(b + m)) d += std::min(text.length(a + m), text.length(b + m));
        out.dlcp[k] = d;
    }
    return out;
}

}  // namespace rleacs
