#include "rleacs/sigma_trie.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

namespace rleacs {

SigmaTrie::SigmaTrie(Symbol symbol, const Trie& t, std::vector<NodeId> t_leaves, std::span<const std::uint64_t> lcp,
                     FreqAggregate aggregate)
    : symbol_(symbol), t_leaves_(std::move(t_leaves)) {
    std::vector<std::uint64_t> depth(t_leaves_.size());
    type_.resize(t_leaves_.size());
    for (std::size_t k = 0; k < t_leaves_.size(); ++k) {
        depth[k] = t.shape().str_depth(t_leaves_[k]);
        type_[k] = t.type(t_leaves_[k]);
    }
    shape_ = CompactTrie(depth, lcp);
    annotate(t, aggregate);
    build_jumps();
}

void SigmaTrie::annotate(const Trie& t, FreqAggregate aggregate) {
    const std::size_t n = shape_.size();
    freq_.assign(n, 0);
    const auto& order = shape_.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId v = *it;
        if (shape_.is_leaf(v)) {
            const NodeId tl = t_leaf(v);
            if (t.type(tl) == Side::y) freq_[v] = t.annotation(tl)->freq;
            continue;
        }
        const auto kids = shape_.children(v);
        std::uint64_t f = freq_[kids.front()];
        for (const NodeId c : kids.subspan(1))
            f = aggregate == FreqAggregate::max ? std::max(f, freq_[c]) : std::min(f, freq_[c]);
        freq_[v] = f;
    }

    weight_.assign(n, 0);
    for (const NodeId v : order) {
        if (v == shape_.root()) continue;
        const NodeId p = shape_.parent(v);
        const u128 step = checked_mul(freq_[v], shape_.str_depth(v) - shape_.str_depth(p), "weight overflow");
        weight_[v] = checked_add(weight_[p], step, "weight overflow");
    }
}

void SigmaTrie::build_jumps() {
    const std::size_t n = shape_.size();
    levels_ = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::bit_width(shape_.max_node_depth())));
    jump_.assign(static_cast<std::size_t>(levels_) * n, kNoNode);
    // Preorder visits ancestors first, so their rows are already complete.
    for (const NodeId v : shape_.preorder()) {
        NodeId* row = jump_.data() + static_cast<std::size_t>(v) * levels_;
        row[0] = shape_.parent(v);
        for (std::uint32_t j = 1; j < levels_ && row[j - 1] != kNoNode; ++j)
            row[j] = jump_[static_cast<std::size_t>(row[j - 1]) * levels_ + j - 1];
    }
}

NodeId SigmaTrie::level_ancestor(NodeId v, std::uint32_t depth) const {
    const std::uint32_t d = shape_.node_depth(v);
    if (depth == 0 || depth > d) return kNoNode;
    std::uint32_t up = d - depth;
    for (std::uint32_t j = 0; up != 0; ++j, up >>= 1)
        if (up & 1u) v = jump(v, j);
    return v;
}

NodeId SigmaTrie::lowest_anc_freq_at_least(NodeId v, std::uint64_t h) const {
    if (freq_[v] >= h) return v;
    // Gallop up to bound the answer, then climb while staying strictly below it.
    std::uint32_t top = 0;
    while (top < levels_) {
        const NodeId a = jump(v, top);
        if (a == kNoNode || freq_[a] >= h) break;
        v = a;
        ++top;
    }
    for (std::uint32_t j = top; j-- > 0;) {
        const NodeId a = jump(v, j);
        if (a != kNoNode && freq_[a] < h) v = a;
    }
    return shape_.parent(v);
}

void SigmaTrie::dump_tsv(std::ostream& out) const {
    out << "node\tparent\tnode_depth\tstr_depth\tfreq\tweight\n";
    for (NodeId v = 0; v < shape_.size(); ++v) {
        const NodeId p = shape_.parent(v);
        out << v << '\t' << (p == kNoNode ? std::string("-") : std::to_string(p)) << '\t' << shape_.node_depth(v)
            << '\t' << shape_.str_depth(v) << '\t' << freq_[v] << '\t' << to_string(weight_[v]) << '\n';
    }
}

std::size_t SigmaTrie::memory_bytes() const {
    return shape_.memory_bytes() + t_leaves_.capacity() * sizeof(NodeId) + type_.capacity() * sizeof(Side) +
           freq_.capacity() * sizeof(std::uint64_t) + weight_.capacity() * sizeof(u128) +
           jump_.capacity() * sizeof(NodeId);
}

SigmaForest::SigmaForest(const Trie& t, const SuffixOrder& order, FreqAggregate aggregate) {
    index_.fill(-1);
    const CompactTrie& shape = t.shape();
    const std::size_t n = shape.leaf_count();

    // One sweep over the leaves. The stack keeps the suffix minima of dlcp
    // (indices and values both increasing), so the LCP of a leaf with the
    // previous leaf of the same symbol is the first entry at or after it.
    std::array<std::vector<std::uint32_t>, 256> ranks;
    std::array<std::vector<std::uint64_t>, 256> lcps;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> stack;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            const std::uint64_t d = order.dlcp[k - 1];
            while (!stack.empty() && stack.back().second >= d) stack.pop_back();
            stack.emplace_back(static_cast<std::uint32_t>(k - 1), d);
        }
        const auto note = t.annotation(shape.leaf(k));
        if (!note) continue;
        const auto s = static_cast<std::uint8_t>(note->symbol);
        if (!ranks[s].empty()) {
            const auto it = std::lower_bound(stack.begin(), stack.end(), ranks[s].back(),
                                             [](const auto& e, std::uint32_t i) { return e.first < i; });
            lcps[s].push_back(it->second);
        }
        ranks[s].push_back(static_cast<std::uint32_t>(k));
    }

    node_of_.assign(n, kNoNode);
    trie_of_.assign(n, -1);
    for (std::size_t s = 0; s < ranks.size(); ++s) {
        const auto& rs = ranks[s];
        if (rs.empty()) continue;
        std::vector<NodeId> leaves(rs.size());
        for (std::size_t k = 0; k < rs.size(); ++k) leaves[k] = shape.leaf(rs[k]);
        index_[s] = static_cast<std::int16_t>(tries_.size());
        tries_.emplace_back(Symbol(static_cast<std::uint8_t>(s)), t, std::move(leaves), lcps[s], aggregate);
        const SigmaTrie& st = tries_.back();
        for (std::size_t k = 0; k < rs.size(); ++k) {
            node_of_[rs[k]] = st.shape().leaf(k);
            trie_of_[rs[k]] = index_[s];
        }
    }
}

const SigmaTrie* SigmaForest::find(Symbol s) const {
    const auto i = index_[static_cast<std::uint8_t>(s)];
    return i < 0 ? nullptr : &tries_[static_cast<std::size_t>(i)];
}

SigmaForest::Location SigmaForest::locate(std::uint32_t t_leaf_rank) const {
    const auto i = trie_of_[t_leaf_rank];
    if (i < 0) return {};
    return {&tries_[static_cast<std::size_t>(i)], node_of_[t_leaf_rank]};
}

std::size_t SigmaForest::memory_bytes() const {
    std::size_t bytes = node_of_.capacity() * sizeof(NodeId) + trie_of_.capacity() * sizeof(std::int16_t);
    for (const auto& st : tries_) bytes += st.memory_bytes();
    return bytes;
}

SigmaForest extract_sigma_tries(const Trie& t, const SuffixOrder& order, FreqAggregate aggregate) {
    return SigmaForest(t, order, aggregate);
}

}  // namespace rleacs
