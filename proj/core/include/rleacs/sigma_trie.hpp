#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rleacs/compact_trie.hpp"
#include "rleacs/int128.hpp"
#include "rleacs/trie.hpp"

namespace rleacs {

/// How subtree freq values combine. Only `max` is correct; `min` exists so
/// the verifier can demonstrate that it catches a broken engine.
enum class FreqAggregate { max, min };

/// Compact trie over the leaves of T whose preceding-run symbol is one fixed
/// symbol. Each node carries freq (largest type-Y freq below it, 0 if none)
/// and weight (Σ freq × strDepth increment along the root path).
class SigmaTrie {
public:
    /// `t_leaves` are T leaves in left-to-right order; `lcp[k]` is the decoded
    /// LCP of t_leaves[k] and t_leaves[k+1].
    SigmaTrie(Symbol symbol, const Trie& t, std::vector<NodeId> t_leaves, std::span<const std::uint64_t> lcp,
              FreqAggregate aggregate = FreqAggregate::max);

    [[nodiscard]] Symbol symbol() const noexcept { return symbol_; }
    [[nodiscard]] const CompactTrie& shape() const noexcept { return shape_; }

    [[nodiscard]] std::uint64_t freq(NodeId v) const { return freq_[v]; }
    [[nodiscard]] u128 weight(NodeId v) const { return weight_[v]; }
    [[nodiscard]] std::uint64_t str_depth(NodeId v) const { return shape_.str_depth(v); }

    /// T leaf behind a leaf of this trie.
    [[nodiscard]] NodeId t_leaf(NodeId v) const { return t_leaves_[shape_.leaf_rank(v)]; }
    [[nodiscard]] Side type(NodeId v) const { return type_[shape_.leaf_rank(v)]; }

    /// Ancestor of `v` (or `v` itself) with the given nodeDepth, kNoNode if
    /// the depth is out of range.
    [[nodiscard]] NodeId level_ancestor(NodeId v, std::uint32_t depth) const;

    /// Deepest node on the path from `v` to the root (both included) with
    /// freq >= h, kNoNode if none. freq never decreases towards the root, so
    /// this descends the jump pointers in O(log N).
    [[nodiscard]] NodeId lowest_anc_freq_at_least(NodeId v, std::uint64_t h) const;
    [[nodiscard]] NodeId lowest_anc_with_y(NodeId v) const { return lowest_anc_freq_at_least(v, 1); }

    /// One line per node: id, parent, nodeDepth, strDepth, freq, weight.
    void dump_tsv(std::ostream& out) const;

    [[nodiscard]] std::size_t memory_bytes() const;

private:
    void annotate(const Trie& t, FreqAggregate aggregate);
    void build_jumps();
    [[nodiscard]] NodeId jump(NodeId v, std::uint32_t j) const { return jump_[static_cast<std::size_t>(v) * levels_ + j]; }

    Symbol symbol_;
    CompactTrie shape_;
    std::vector<NodeId> t_leaves_;
    std::vector<Side> type_;
    std::vector<std::uint64_t> freq_;
    std::vector<u128> weight_;
    std::uint32_t levels_ = 0;
    std::vector<NodeId> jump_;  // jump_[v * levels_ + j] = 2^j-th ancestor
};

/// All SigmaTries of one pair, plus the map from T leaves into them.
class SigmaForest {
public:
    SigmaForest(const Trie& t, const SuffixOrder& order, FreqAggregate aggregate = FreqAggregate::max);

    struct Location {
        const SigmaTrie* trie = nullptr;
        NodeId node = kNoNode;
    };

    /// nullptr when no leaf carries this symbol.
    [[nodiscard]] const SigmaTrie* find(Symbol s) const;
    /// Where the T leaf of left-to-right rank `t_leaf_rank` lives; trie is
    /// nullptr for the two unannotated leaves.
    [[nodiscard]] Location locate(std::uint32_t t_leaf_rank) const;

    [[nodiscard]] const std::vector<SigmaTrie>& tries() const noexcept { return tries_; }
    [[nodiscard]] std::size_t memory_bytes() const;

private:
    std::vector<SigmaTrie> tries_;
    std::array<std::int16_t, 256> index_{};
    std::vector<NodeId> node_of_;       // by T leaf rank
    std::vector<std::int16_t> trie_of_;  // by T leaf rank
};

SigmaForest extract_sigma_tries(const Trie& t, const SuffixOrder& order,
                                FreqAggregate aggregate = FreqAggregate::max);

}  // namespace rleacs
