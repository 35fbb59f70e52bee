#include "qdt/partitions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qdt {

Partition3D::Partition3D(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
    std::sort(boxes_.begin(), boxes_.end());
    boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
    if (!is_downward_closed(boxes_))
        throw std::invalid_argument("box set is not downward-closed");
}

bool Partition3D::contains(const Box& b) const {
    return std::binary_search(boxes_.begin(), boxes_.end(), b);
}

std::string Partition3D::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < boxes_.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(boxes_[i][0]) + "," + std::to_string(boxes_[i][1]) + "," +
             std::to_string(boxes_[i][2]) + ")";
    }
    s += "]";
    return s;
}

size_t Partition3DHash::operator()(const Partition3D& p) const {
    uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (const Box& b : p.boxes())
        for (int c : b) {
            h ^= static_cast<uint64_t>(static_cast<uint32_t>(c));
            h *= 1099511628211ull;
        }
    return static_cast<size_t>(h);
}

bool is_downward_closed(const std::vector<Box>& boxes) {
    std::set<Box> set(boxes.begin(), boxes.end());
    for (const Box& b : set)
        for (int i = 0; i < 3; ++i) {
            if (b[i] < 0) return false;
            if (b[i] > 0) {
                Box below = b;
                --below[i];
                if (!set.count(below)) return false;
            }
        }
    return true;
}

namespace {

// Boxes whose removal keeps the set downward-closed.
bool is_removable(const std::vector<Box>& sorted, const Box& b) {
    for (int i = 0; i < 3; ++i) {
        Box above = b;
        ++above[i];
        if (std::binary_search(sorted.begin(), sorted.end(), above)) return false;
    }
    return true;
}

Box canonical_removal(const std::vector<Box>& sorted) {
    // Lexicographically largest removable box; always exists for a nonempty
    // partition.
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it)
        if (is_removable(sorted, *it)) return *it;
    throw std::logic_error("nonempty partition without removable box");
}

std::vector<Box> addable_boxes(const std::vector<Box>& sorted) {
    if (sorted.empty()) return {Box{0, 0, 0}};
    std::set<Box> candidates;
    for (const Box& b : sorted)
        for (int i = 0; i < 3; ++i) {
            Box above = b;
            ++above[i];
            candidates.insert(above);
        }
    std::vector<Box> out;
    for (const Box& c : candidates) {
        if (std::binary_search(sorted.begin(), sorted.end(), c)) continue;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            if (c[i] == 0) continue;
            Box below = c;
            --below[i];
            if (!std::binary_search(sorted.begin(), sorted.end(), below)) ok = false;
        }
        if (ok) out.push_back(c);
    }
    return out;
}

}  // namespace

std::vector<Partition3D> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    std::vector<std::vector<Box>> level = {{}};
    // Orderly generation: a child survives only when the added box is the
    // canonical removal of the child, so each partition appears once.
    for (int k = 0; k < n; ++k) {
        std::vector<std::vector<Box>> next;
        for (const auto& p : level)
            for (const Box& b : addable_boxes(p)) {
                std::vector<Box> child = p;
                child.insert(std::upper_bound(child.begin(), child.end(), b), b);
                if (canonical_removal(child) == b) next.push_back(std::move(child));
            }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    std::vector<Partition3D> out;
    out.reserve(level.size());
    for (auto& boxes : level) out.emplace_back(std::move(boxes));
    return out;
}

}  // namespace qdt
