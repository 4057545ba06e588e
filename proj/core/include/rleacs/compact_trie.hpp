#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace rleacs {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Shape of a compact trie rebuilt from sorted leaves and adjacent LCPs.
/// Node 0 is the root. Children are kept in left-to-right order.
class CompactTrie {
public:
    CompactTrie() = default;

    /// `leaf_depth[k]` is the string depth of the k-th leaf; `lcp[k]` is the
    /// LCP of leaves k and k+1 and must be smaller than both leaf depths.
    CompactTrie(std::span<const std::uint64_t> leaf_depth, std::span<const std::uint64_t> lcp);

    [[nodiscard]] NodeId root() const noexcept { return 0; }
    [[nodiscard]] std::size_t size() const noexcept { return parent_.size(); }
    [[nodiscard]] std::size_t leaf_count() const noexcept { return leaves_.size(); }

    [[nodiscard]] NodeId parent(NodeId v) const { return parent_[v]; }
    [[nodiscard]] std::span<const NodeId> children(NodeId v) const {
        return {child_list_.data() + child_begin_[v], child_list_.data() + child_begin_[v + 1]};
    }
    [[nodiscard]] std::uint64_t str_depth(NodeId v) const { return str_depth_[v]; }
    /// Nodes on the root path, root counted as 1.
    [[nodiscard]] std::uint32_t node_depth(NodeId v) const { return node_depth_[v]; }
    [[nodiscard]] std::uint32_t max_node_depth() const noexcept { return max_node_depth_; }

    [[nodiscard]] bool is_leaf(NodeId v) const { return leaf_rank_[v] != kNoNode; }
    /// Left-to-right index of a leaf, kNoNode for internal nodes.
    [[nodiscard]] std::uint32_t leaf_rank(NodeId v) const { return leaf_rank_[v]; }
    [[nodiscard]] NodeId leaf(std::size_t k) const { return leaves_[k]; }

    /// Nodes in an order where every parent precedes its children.
    [[nodiscard]] const std::vector<NodeId>& preorder() const noexcept { return preorder_; }

    [[nodiscard]] std::size_t memory_bytes() const;

private:
    std::vector<NodeId> parent_;
    std::vector<std::uint64_t> str_depth_;
    std::vector<std::uint32_t> node_depth_;
    std::vector<std::uint32_t> leaf_rank_;
    std::vector<NodeId> leaves_;
    std::vector<std::uint32_t> child_begin_;
    std::vector<NodeId> child_list_;
    std::vector<NodeId> preorder_;
    std::uint32_t max_node_depth_ = 0;
};

}  // namespace rleacs
