#include "rleacs/compact_trie.hpp"

#include <cassert>
#include <stdexcept>

namespace rleacs {

CompactTrie::CompactTrie(std::span<const std::uint64_t> leaf_depth, std::span<const std::uint64_t> lcp) {
    const std::size_t n = leaf_depth.size();
    if (n == 0 || lcp.size() + 1 != n) throw std::invalid_argument("CompactTrie: lcp must have one entry less than leaves");

    const auto add_node = [this](NodeId parent, std::uint64_t depth, std::uint32_t rank) {
        const auto id = static_cast<NodeId>(parent_.size());
        parent_.push_back(parent);
        str_depth_.push_back(depth);
        leaf_rank_.push_back(rank);
        return id;
    };
    parent_.reserve(2 * n);
    str_depth_.reserve(2 * n);
    leaf_rank_.reserve(2 * n);
    leaves_.reserve(n);

    // Stack sweep over the rightmost path. A node's parent is the node below
    // it on the stack unless a new internal node is spliced in between.
    std::vector<NodeId> stack{add_node(kNoNode, 0, kNoNode)};
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            const std::uint64_t l = lcp[k - 1];
            if (l >= leaf_depth[k - 1] || l >= leaf_depth[k])
                throw std::invalid_argument("CompactTrie: leaf is a prefix of its neighbour");
            NodeId last = kNoNode;
            while (str_depth_[stack.back()] > l) {
                last = stack.back();
                stack.pop_back();
            }
            if (str_depth_[stack.back()] < l) {
                const NodeId w = add_node(stack.back(), l, kNoNode);
                parent_[last] = w;
                stack.push_back(w);
            }
        }
        const NodeId leaf = add_node(stack.back(), leaf_depth[k], static_cast<std::uint32_t>(k));
        leaves_.push_back(leaf);
        stack.push_back(leaf);
    }

    // Children sorted by id are in left-to-right order: a spliced node is
    // created after its first child but before every later sibling's subtree.
    const std::size_t size = parent_.size();
    child_begin_.assign(size + 1, 0);
    for (NodeId v = 1; v < size; ++v) ++child_begin_[parent_[v] + 1];
    for (std::size_t v = 0; v < size; ++v) child_begin_[v + 1] += child_begin_[v];
    child_list_.resize(size > 0 ? size - 1 : 0);
    std::vector<std::uint32_t> fill(child_begin_.begin(), child_begin_.end() - 1);
    for (NodeId v = 1; v < size; ++v) child_list_[fill[parent_[v]]++] = v;

    node_depth_.assign(size, 0);
    preorder_.reserve(size);
    std::vector<NodeId> dfs{root()};
    node_depth_[root()] = 1;
    while (!dfs.empty()) {
        const NodeId v = dfs.back();
        dfs.pop_back();
        preorder_.push_back(v);
        max_node_depth_ = std::max(max_node_depth_, node_depth_[v]);
        const auto kids = children(v);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            node_depth_[*it] = node_depth_[v] + 1;
            dfs.push_back(*it);
        }
    }
    assert(preorder_.size() == size);
}

std::size_t CompactTrie::memory_bytes() const {
    return parent_.capacity() * sizeof(NodeId) + str_depth_.capacity() * sizeof(std::uint64_t) +
           node_depth_.capacity() * sizeof(std::uint32_t) + leaf_rank_.capacity() * sizeof(std::uint32_t) +
           leaves_.capacity() * sizeof(NodeId) + child_begin_.capacity() * sizeof(std::uint32_t) +
           child_list_.capacity() * sizeof(NodeId) + preorder_.capacity() * sizeof(NodeId);
}

}  // namespace rleacs
