#include "rleacs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "rleacs/corpus.hpp"

namespace rleacs {

namespace {

std::string fmt_node(const char* what, NodeId v) { return std::string(what) + " at node " + std::to_string(v); }

/// [first, last] leaf ranks under each node.
std::vector<std::pair<std::uint32_t, std::uint32_t>> leaf_intervals(const CompactTrie& t) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> span(t.size(), {kNoNode, 0});
    const auto& order = t.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId v = *it;
        if (t.is_leaf(v)) {
            span[v] = {t.leaf_rank(v), t.leaf_rank(v)};
            continue;
        }
        for (const NodeId c : t.children(v)) {
            span[v].first = std::min(span[v].first, span[c].first);
            span[v].second = std::max(span[v].second, span[c].second);
        }
    }
    return span;
}

std::uint64_t range_min(const std::vector<std::uint64_t>& a, std::size_t lo, std::size_t hi) {
    return *std::min_element(a.begin() + static_cast<std::ptrdiff_t>(lo), a.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
}

}  // namespace

std::string check_freq_monotone(const SigmaForest& forest) {
    for (const auto& st : forest.tries()) {
        const auto& t = st.shape();
        for (NodeId v = 1; v < t.size(); ++v)
            if (st.freq(v) > st.freq(t.parent(v))) return fmt_node("freq increases towards leaf", v);
    }
    return {};
}

std::string check_weight_telescoping(const SigmaForest& forest) {
    for (const auto& st : forest.tries()) {
        const auto& t = st.shape();
        for (NodeId v = 0; v < t.size(); ++v) {
            u128 sum = 0;
            for (NodeId c = v; c != t.root(); c = t.parent(c))
                sum += u128{st.freq(c)} * (t.str_depth(c) - t.str_depth(t.parent(c)));
            if (sum != st.weight(v)) return fmt_node("weight differs from root-path sum", v);
        }
    }
    return {};
}

std::string check_str_depth(const AcsEngine& engine) {
    const auto& dlcp = engine.order().dlcp;
    const CompactTrie& t = engine.trie().shape();
    if (t.str_depth(t.root()) != 0) return "root strDepth is not 0";
    const auto spans = leaf_intervals(t);
    for (NodeId v = 0; v < t.size(); ++v) {
        if (t.is_leaf(v)) continue;
        const auto [lo, hi] = spans[v];
        if (lo == hi) return fmt_node("internal node with a single leaf", v);
        if (t.str_depth(v) != range_min(dlcp, lo, hi - 1)) return fmt_node("strDepth differs from dlcp minimum", v);
    }
    for (const auto& st : engine.sigma().tries()) {
        const auto& s = st.shape();
        const auto sspans = leaf_intervals(s);
        for (NodeId v = 0; v < s.size(); ++v) {
            if (s.is_leaf(v) || v == s.root()) continue;
            const auto lo = t.leaf_rank(st.t_leaf(s.leaf(sspans[v].first)));
            const auto hi = t.leaf_rank(st.t_leaf(s.leaf(sspans[v].second)));
            if (s.str_depth(v) != range_min(dlcp, lo, hi - 1))
                return fmt_node("sigma-trie strDepth differs from leaf-set LCP", v);
        }
    }
    return {};
}

std::string check_partition(const AcsEngine& engine) {
    const CompactTrie& t = engine.trie().shape();
    std::vector<int> seen(t.size(), 0);
    for (const auto& st : engine.sigma().tries()) {
        for (std::size_t k = 0; k < st.shape().leaf_count(); ++k) {
            const NodeId tl = st.t_leaf(st.shape().leaf(k));
            const auto note = engine.trie().annotation(tl);
            if (!note || note->symbol != st.symbol()) return fmt_node("leaf in the wrong sigma trie", tl);
            ++seen[tl];
        }
    }
    for (std::size_t k = 0; k < t.leaf_count(); ++k) {
        const NodeId tl = t.leaf(k);
        const int expected = engine.trie().annotation(tl) ? 1 : 0;
        if (seen[tl] != expected) return fmt_node("annotated leaf not covered exactly once", tl);
    }
    return {};
}

std::string check_ancestor_search(const SigmaForest& forest) {
    for (const auto& st : forest.tries()) {
        const auto& t = st.shape();
        for (std::size_t k = 0; k < t.leaf_count(); ++k) {
            const NodeId leaf = t.leaf(k);
            // Thresholds around every freq value on the path cover all answers.
            std::vector<std::uint64_t> hs{1};
            for (NodeId a = leaf; a != kNoNode; a = t.parent(a)) {
                hs.push_back(st.freq(a));
                hs.push_back(st.freq(a) + 1);
            }
            for (const std::uint64_t h : hs) {
                if (h == 0) continue;
                NodeId expected = leaf;
                while (expected != kNoNode && st.freq(expected) < h) expected = t.parent(expected);
                if (st.lowest_anc_freq_at_least(leaf, h) != expected)
                    return fmt_node("ancestor search disagrees with parent walk", leaf);
            }
            for (std::uint32_t d = 1; d <= t.node_depth(leaf); ++d) {
                NodeId a = leaf;
                while (t.node_depth(a) > d) a = t.parent(a);
                if (st.level_ancestor(leaf, d) != a) return fmt_node("level ancestor mismatch", leaf);
            }
        }
    }
    return {};
}

std::string check_last_run_closed_form(const AcsEngine& engine) {
    const std::size_t last = engine.x_runs() - 1;
    const std::uint64_t f = engine.text().length(last);
    const std::uint64_t m = engine.max_run()[engine.text().symbol(last)];
    // (1 + ... + f) when the run fits in Y's longest run, else (1 + ... + m) + m(f - m).
    u128 expected = 0;
    if (m > 0) expected = f <= m ? u128{f} * (f + 1) / 2 : u128{m} * (m + 1) / 2 + u128{m} * (f - m);
    if (engine.compute_A(last) != expected) return "last run differs from its closed form";
    return {};
}

namespace {

std::string compare_with_oracle(const RleSeq& x, const RleSeq& y, const VerifyConfig& config) {
    const AcsEngine engine(x, y, config.engine);

    if (engine.order() != oracle::brute_suffix_sort(x, y, config.budget)) return "suffix order differs from brute-force sort";

    const std::string dx = decode(x);
    const std::string dy = decode(y);
    const auto expected_l = oracle::brute_L(dx, dy, config.budget);
    u128 expected_sum = 0;
    for (const auto v : expected_l) expected_sum += v;
    const AcsResult result = engine.acs();
    if (result.lsum != expected_sum) return "lsum " + to_string(result.lsum) + " != brute force " + to_string(expected_sum);
    if (result.x != dx.size()) return "decoded length mismatch";

    const auto l = engine.compute_L_per_position(config.budget.max_length);
    if (l != expected_l) return "per-position L differs from brute force";
    std::size_t p = 0;
    u128 per_position_sum = 0;
    for (std::size_t i = 0; i < engine.x_runs(); ++i) {
        u128 group = 0;
        for (std::uint64_t k = 0; k < engine.text().length(i); ++k) group += l[p++];
        if (group != engine.compute_A(i)) return "run " + std::to_string(i) + ": A differs from per-position sum";
        per_position_sum += group;
    }
    if (per_position_sum != result.lsum) return "per-position total differs from per-run total";

    for (auto check : {check_last_run_closed_form(engine), check_freq_monotone(engine.sigma()),
                       check_weight_telescoping(engine.sigma()), check_str_depth(engine), check_partition(engine),
                       check_ancestor_search(engine.sigma())}) {
        if (!check.empty()) return check;
    }

    if (x.text_length() >= 2) {
        if (std::abs(dist(x, x).dist) > 1e-12) return "Dist(X,X) != 0";
    }
    if (x.text_length() >= 2 && y.text_length() >= 2 && result.lsum != 0) {
        if (std::abs(dist(x, y).dist - dist(y, x).dist) > 1e-12) return "Dist is not symmetric";
    }
    return {};
}

}  // namespace

std::string check_pair(const RleSeq& x, const RleSeq& y, const VerifyConfig& config) {
    try {
        return compare_with_oracle(x, y, config);
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

VerifyReport run_verification(const VerifyConfig& config) {
    VerifyReport report;
    std::mt19937_64 rng(config.seed);
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        const RandomRleParams params = verification_params(trial, config.n_max);
        const RleSeq x = random_rle(rng, params, "X" + std::to_string(trial));
        const RleSeq y = random_rle(rng, params, "Y" + std::to_string(trial));
        ++report.total;
        const std::string failure = check_pair(x, y, config);
        if (!failure.empty()) {
            report.failure = "trial " + std::to_string(trial) + ": " + failure;
            report.counterexample = format_rle_text(x) + format_rle_text(y);
            return report;
        }
        ++report.passed;
    }
    return report;
}

}  // namespace rleacs
