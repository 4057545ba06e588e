#include "rleacs/trie.hpp"

#include <algorithm>

namespace rleacs {

namespace {

CompactTrie shape_from(const PairText& text, const SuffixOrder& order) {
    std::vector<std::uint64_t> depth(order.order.size());
    for (std::size_t k = 0; k < depth.size(); ++k) depth[k] = text.suffix_length(order.order[k]);
    return CompactTrie(depth, order.dlcp);
}

}  // namespace

Trie::Trie(const PairText& text, const SuffixOrder& order) : shape_(shape_from(text, order)) {
    const std::size_t n = order.order.size();
    leaf_pos_ = order.order;
    side_.resize(n);
    note_.resize(n);
    leaf_by_pos_.assign(text.size(), kNoNode);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t pos = order.order[k];
        side_[k] = text.side(pos);
        leaf_by_pos_[pos] = shape_.leaf(k);
        if (!text.is_first_run(pos)) note_[k] = {text.symbol(pos - 1), text.length(pos - 1)};
    }
}

std::optional<LeafAnnotation> Trie::annotation(NodeId v) const {
    const LeafAnnotation& a = note_[shape_.leaf_rank(v)];
    if (a.freq == 0) return std::nullopt;
    return a;
}

std::size_t Trie::memory_bytes() const {
    return shape_.memory_bytes() + leaf_pos_.capacity() * sizeof(std::uint32_t) + side_.capacity() * sizeof(Side) +
           note_.capacity() * sizeof(LeafAnnotation) + leaf_by_pos_.capacity() * sizeof(NodeId);
}

Trie build_trie(const PairText& text, const SuffixOrder& order) { return Trie(text, order); }

MaxRunTable::MaxRunTable(const RleSeq& y) {
    table_.fill(0);
    for (const Run& r : y.runs()) {
        if (Alphabet::is_sentinel(r.symbol)) continue;
        auto& slot = table_[static_cast<std::uint8_t>(r.symbol)];
        slot = std::max(slot, r.length);
    }
}

MaxRunTable MaxRunTable::of_y(const PairText& text) {
    MaxRunTable t;
    for (std::size_t p = text.x_runs(); p < text.size(); ++p) {
        if (text.is_sentinel_run(p)) continue;
        auto& slot = t.table_[static_cast<std::uint8_t>(text.symbol(p))];
        slot = std::max(slot, text.length(p));
    }
    return t;
}

}  // namespace rleacs
