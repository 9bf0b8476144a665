#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mis {

using Node = std::int32_t;

/// Dense bitset over node ids [0, n).
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static NodeSet from_nodes(std::size_t universe, const std::vector<Node>& nodes) {
        NodeSet s(universe);
        for (Node v : nodes) s.insert(v);
        return s;
    }

    std::size_t universe() const { return universe_; }

    void insert(Node v) { words_[word(v)] |= bit(v); }
    void erase(Node v) { words_[word(v)] &= ~bit(v); }
    bool contains(Node v) const { return (words_[word(v)] & bit(v)) != 0; }

    std::size_t size() const {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }
    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    bool is_subset_of(const NodeSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        return true;
    }

    /// Members in ascending order.
    std::vector<Node> to_vector() const {
        std::vector<Node> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w != 0) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<Node>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const NodeSet&, const NodeSet&) = default;

private:
    static std::size_t word(Node v) { return static_cast<std::size_t>(v) >> 6; }
    static std::uint64_t bit(Node v) { return std::uint64_t{1} << (static_cast<unsigned>(v) & 63U); }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace mis
