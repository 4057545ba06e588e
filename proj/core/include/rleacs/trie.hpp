#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rleacs/compact_trie.hpp"
#include "rleacs/suffix_order.hpp"

namespace rleacs {

/// Symbol and length of the run right before a leaf's suffix.
struct LeafAnnotation {
    Symbol symbol{};
    std::uint64_t freq = 0;
};

/// The generalized compact trie over all run-start suffixes of a pair.
/// The k-th leaf is the k-th smallest suffix of the SuffixOrder.
class Trie {
public:
    Trie(const PairText& text, const SuffixOrder& order);

    [[nodiscard]] const CompactTrie& shape() const noexcept { return shape_; }

    /// PairText position of the suffix at leaf `v`.
    [[nodiscard]] std::uint32_t suffix(NodeId v) const { return leaf_pos_[shape_.leaf_rank(v)]; }
    [[nodiscard]] Side type(NodeId v) const { return side_[shape_.leaf_rank(v)]; }
    /// Empty for the first suffix of each sequence.
    [[nodiscard]] std::optional<LeafAnnotation> annotation(NodeId v) const;

    /// Leaf node holding the suffix at PairText position `pos`.
    [[nodiscard]] NodeId leaf_of(std::size_t pos) const { return leaf_by_pos_[pos]; }

    [[nodiscard]] std::size_t memory_bytes() const;

private:
    CompactTrie shape_;
    std::vector<std::uint32_t> leaf_pos_;  // by leaf rank
    std::vector<Side> side_;               // by leaf rank
    std::vector<LeafAnnotation> note_;     // by leaf rank; freq 0 = none
    std::vector<NodeId> leaf_by_pos_;
};

Trie build_trie(const PairText& text, const SuffixOrder& order);

/// Longest run of each symbol in Y, 0 when the symbol does not occur.
class MaxRunTable {
public:
    MaxRunTable() { table_.fill(0); }
    explicit MaxRunTable(const RleSeq& y);
    /// Y side of a pair text.
    static MaxRunTable of_y(const PairText& text);

    [[nodiscard]] std::uint64_t operator[](Symbol s) const { return table_[static_cast<std::uint8_t>(s)]; }

private:
    std::array<std::uint64_t, 256> table_{};
};

inline MaxRunTable build_maxrun(const RleSeq& y) { return MaxRunTable(y); }

}  // namespace rleacs
