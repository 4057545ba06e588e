#include "rleacs/acs.hpp"

#include <cmath>
#include <stdexcept>

namespace rleacs {

AcsEngine::AcsEngine(const RleSeq& x, const RleSeq& y, EngineOptions options)
    : text_(x, y),
      order_(build_suffix_order(text_)),
      trie_(text_, order_),
      max_run_(MaxRunTable::of_y(text_)),
      sigma_(trie_, order_, options.freq_aggregate) {}

SigmaForest::Location AcsEngine::follower(std::size_t run) const {
    const NodeId leaf = trie_.leaf_of(run + 1);
    return sigma_.locate(trie_.shape().leaf_rank(leaf));
}

u128 AcsEngine::compute_A(std::size_t run) const {
    // The run following the last one is X's sentinel, whose leaf only shares
    // the root with other leaves, so this path also covers run x'-1.
    const auto [st, w] = follower(run);
    return run_sum(run, *st, w);
}

u128 AcsEngine::run_sum(std::size_t run, const SigmaTrie& st, NodeId w) const {
    const std::uint64_t f = text_.length(run);
    const std::uint64_t m = max_run_[text_.symbol(run)];
    if (m == 0) return 0;
    const NodeId v = st.lowest_anc_with_y(w);
    if (v == kNoNode) throw std::logic_error("sigma trie root lacks the longest Y run");
    constexpr const char* kOverflow = "A overflow";
    if (f > m) {
        // Σ_{h<=m} (h + strDepth(v_h)) + m(f - m)
        const u128 tail = checked_sub(checked_mul(m, f, kOverflow), u128{m} * (m - 1) / 2, kOverflow);
        return checked_add(st.weight(v), tail, kOverflow);
    }
    const NodeId u = st.lowest_anc_freq_at_least(w, f);
    if (u == kNoNode) throw std::logic_error("sigma trie root lacks the longest Y run");
    u128 a = checked_sub(st.weight(v), st.weight(u), kOverflow);
    a = checked_add(a, checked_mul(f, st.str_depth(u), kOverflow), kOverflow);
    return checked_add(a, u128{f} * (f + 1) / 2, kOverflow);
}

AcsResult AcsEngine::acs() const {
    AcsResult r;
    r.x = x_length();
    // Same sum as over compute_A(i), visited leaf by leaf so that neighbouring
    // queries touch neighbouring nodes.
    for (const SigmaTrie& st : sigma_.tries()) {
        const auto& shape = st.shape();
        for (std::size_t k = 0; k < shape.leaf_count(); ++k) {
            const NodeId w = shape.leaf(k);
            if (st.type(w) != Side::x) continue;
            const std::uint32_t pos = trie_.suffix(st.t_leaf(w));
            r.lsum = checked_add(r.lsum, run_sum(pos - 1, st, w), "A overflow");
        }
    }
    return r;
}

std::vector<std::uint64_t> AcsEngine::compute_L_per_position(std::uint64_t position_cap) const {
    if (x_length() > position_cap) throw DataError("decoded length over validation cap");
    std::vector<std::uint64_t> out;
    out.reserve(x_length());
    for (std::size_t i = 0; i < x_runs(); ++i) {
        const std::uint64_t f = text_.length(i);
        const std::uint64_t m = max_run_[text_.symbol(i)];
        const auto [st, w] = follower(i);
        // X[p..] = σ^h ∘ X[F(i+1)..] with h running from f down to 1.
        for (std::uint64_t h = f; h >= 1; --h) {
            if (h > m) {
                out.push_back(m);
                continue;
            }
            const NodeId v = st->lowest_anc_freq_at_least(w, h);
            if (v == kNoNode) throw std::logic_error("sigma trie root lacks the longest Y run");
            out.push_back(h + st->str_depth(v));
        }
    }
    return out;
}

std::size_t AcsEngine::memory_bytes() const {
    return text_.size() * (sizeof(Symbol) + sizeof(std::uint64_t)) +
           order_.order.capacity() * sizeof(std::uint32_t) + order_.dlcp.capacity() * sizeof(std::uint64_t) +
           trie_.memory_bytes() + sigma_.memory_bytes();
}

AcsResult acs(const RleSeq& x, const RleSeq& y) { return AcsEngine(x, y).acs(); }

Rational acs_self(std::uint64_t x) {
    if (x == 0) throw DataError("empty sequence");
    return {u128{x} + 1, 2};
}

double log_in(LogBase base, double v) {
    switch (base) {
        case LogBase::two: return std::log2(v);
        case LogBase::ten: return std::log10(v);
        case LogBase::e: break;
    }
    return std::log(v);
}

const char* to_string(LogBase base) {
    switch (base) {
        case LogBase::two: return "2";
        case LogBase::ten: return "10";
        case LogBase::e: break;
    }
    return "e";
}

DistResult dist(const RleSeq& x, const RleSeq& y, LogBase base) {
    if (x.text_length() < 2 || y.text_length() < 2) throw DataError("sequence too short");
    DistResult r;
    r.log_base = base;
    r.acs_xy = acs(x, y).value();
    r.acs_yx = acs(y, x).value();
    if (r.acs_xy.num == 0 || r.acs_yx.num == 0) throw DataError("no common substring");
    r.acs_xx = acs_self(x.text_length());
    r.acs_yy = acs_self(y.text_length());

    const double log_x = log_in(base, static_cast<double>(x.text_length()));
    const double log_y = log_in(base, static_cast<double>(y.text_length()));
    const double cross = log_y / r.acs_xy.to_double() + log_x / r.acs_yx.to_double();
    const double self = log_x / r.acs_xx.to_double() + log_y / r.acs_yy.to_double();
    r.dist = 0.5 * cross - 0.5 * self;
    return r;
}

}  // namespace rleacs
