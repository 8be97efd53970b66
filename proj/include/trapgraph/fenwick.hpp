#pragma once
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace trapgraph {

// Largest power of two dividing i (the span owned by tree node i).
inline int lowbit(int i) { return i & (-i); }

// Tree nodes read by a prefix query at `index`: strip the lowest set bit
// until zero. prefix_query_path(11) = {11, 10, 8}.
inline std::vector<int> prefix_query_path(int index) {
    std::vector<int> path;
    for (int j = index; j > 0; j -= lowbit(j)) path.push_back(j);
    return path;
}

// Tree nodes written by a point update at `index` in a tree of size n.
inline std::vector<int> point_update_path(int index, int n) {
    std::vector<int> path;
    for (int j = index; j <= n; j += lowbit(j)) path.push_back(j);
    return path;
}

// Binary indexed tree over logical array A(1..N) supporting point add and
// prefix sum in O(log N). Node i stores the sum of A(i - lowbit(i) + 1 .. i).
// Element type is a parameter: machine integers for benchmarks, BigCount for
// set counting. Instances are not internally synchronized.
template <typename T>
class SumFenwick {
public:
    explicit SumFenwick(int size) : size_(size), tree_(static_cast<std::size_t>(size) + 1, T{}) {
        if (size < 0) throw std::out_of_range("SumFenwick: negative size");
    }

    int size() const { return size_; }

    // A(index) += delta.
    void update(int index, const T& delta) {
        if (index < 1 || index > size_) throw std::out_of_range("SumFenwick::update: index out of range");
        last_op_visits_ = 0;
        for (int j = index; j <= size_; j += lowbit(j)) {
            tree_[static_cast<std::size_t>(j)] += delta;
            ++last_op_visits_;
        }
        total_visits_ += last_op_visits_;
    }

    // A(1) + ... + A(index); index 0 is the empty prefix.
    T prefix_sum(int index) const {
        if (index < 0 || index > size_) throw std::out_of_range("SumFenwick::prefix_sum: index out of range");
        last_op_visits_ = 0;
        T acc{};
        for (int j = index; j > 0; j -= lowbit(j)) {
            acc += tree_[static_cast<std::size_t>(j)];
            ++last_op_visits_;
        }
        total_visits_ += last_op_visits_;
        return acc;
    }

    // Undo previous updates given exactly the (index, added value) pairs since
    // the last reset; restores the all-zero state in O(|touched| log N)
    // instead of O(N). The caller owns the bookkeeping.
    void targeted_reset(const std::vector<std::pair<int, T>>& touched) {
        for (const auto& [index, value] : touched) {
            if (index < 1 || index > size_) throw std::out_of_range("SumFenwick::targeted_reset: index out of range");
            for (int j = index; j <= size_; j += lowbit(j)) {
                tree_[static_cast<std::size_t>(j)] -= value;
                ++total_visits_;
            }
        }
    }

    // Raw node value; node indices 1..N. Exposed for golden tests.
    const T& tree_node(int i) const {
        if (i < 1 || i > size_) throw std::out_of_range("SumFenwick::tree_node: index out of range");
        return tree_[static_cast<std::size_t>(i)];
    }

    // Nodes touched by the most recent update or prefix_sum.
    std::uint64_t last_op_visits() const { return last_op_visits_; }
    std::uint64_t total_visits() const { return total_visits_; }

private:
    int size_;
    std::vector<T> tree_;
    mutable std::uint64_t last_op_visits_ = 0;
    mutable std::uint64_t total_visits_ = 0;
};

// Prefix-maximum binary indexed tree. Point updates are monotone raises, so
// no reset is supported: lowering a maximum cannot be done node-locally, and
// the reuse trick this library needs (see the level passes in independence)
// only ever applies to the sum variant. Untouched elements read as the
// sentinel (-1 by default, matching the max-chain sweep convention).
template <typename T>
class MaxFenwick {
public:
    explicit MaxFenwick(int size, T sentinel = T(-1))
        : size_(size), sentinel_(sentinel), tree_(static_cast<std::size_t>(size) + 1, sentinel) {
        if (size < 0) throw std::out_of_range("MaxFenwick: negative size");
    }

    int size() const { return size_; }
    const T& sentinel() const { return sentinel_; }

    // A(index) = max(A(index), value).
    void raise(int index, const T& value) {
        if (index < 1 || index > size_) throw std::out_of_range("MaxFenwick::raise: index out of range");
        last_op_visits_ = 0;
        for (int j = index; j <= size_; j += lowbit(j)) {
            auto& node = tree_[static_cast<std::size_t>(j)];
            if (node < value) node = value;
            ++last_op_visits_;
        }
        total_visits_ += last_op_visits_;
    }

    // max over A(1..index); index 0 or an untouched prefix yields the sentinel.
    T prefix_max(int index) const {
        if (index < 0 || index > size_) throw std::out_of_range("MaxFenwick::prefix_max: index out of range");
        last_op_visits_ = 0;
        T acc = sentinel_;
        for (int j = index; j > 0; j -= lowbit(j)) {
            const auto& node = tree_[static_cast<std::size_t>(j)];
            if (acc < node) acc = node;
            ++last_op_visits_;
        }
        total_visits_ += last_op_visits_;
        return acc;
    }

    std::uint64_t last_op_visits() const { return last_op_visits_; }
    std::uint64_t total_visits() const { return total_visits_; }

private:
    int size_;
    T sentinel_;
    std::vector<T> tree_;
    mutable std::uint64_t last_op_visits_ = 0;
    mutable std::uint64_t total_visits_ = 0;
};

} // namespace trapgraph
