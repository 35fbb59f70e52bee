// 3-dimensional partitions: finite downward-closed subsets of Z_{>=0}^3,
// equivalently the staircases of finite-colength monomial ideals in three
// variables.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qdt {

using Box = std::array<int, 3>;

// Immutable after construction; boxes are kept sorted so equality, ordering
// and hashing are structural.
class Partition3D {
public:
    Partition3D() = default;

    // `boxes` must be downward-closed; throws std::invalid_argument otherwise.
    explicit Partition3D(std::vector<Box> boxes);

    size_t size() const { return boxes_.size(); }
    bool empty() const { return boxes_.empty(); }
    const std::vector<Box>& boxes() const { return boxes_; }

    bool contains(const Box& b) const;

    bool operator==(const Partition3D& o) const { return boxes_ == o.boxes_; }
    bool operator!=(const Partition3D& o) const { return boxes_ != o.boxes_; }
    bool operator<(const Partition3D& o) const { return boxes_ < o.boxes_; }

    // Rendering such as "[(0,0,0),(1,0,0)]" for diagnostics and CLI output.
    std::string to_string() const;

private:
    std::vector<Box> boxes_;  // sorted ascending, lexicographic
};

struct Partition3DHash {
    size_t operator()(const Partition3D& p) const;
};

// True iff removing any box (k1,k2,k3) with k_i > 0 still finds the
// neighbour with k_i - 1 present.
bool is_downward_closed(const std::vector<Box>& boxes);

// All 3D partitions with exactly n boxes, each exactly once, sorted
// lexicographically by their sorted box lists.
std::vector<Partition3D> enumerate_partitions(int n);

}  // namespace qdt
