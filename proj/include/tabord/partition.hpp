#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tabord {

// A partition is a weakly decreasing sequence of positive integers.
//
// Parts are COLUMN heights of the Young diagram: the diagram of (3,2,2,1)
// has four top-aligned columns of heights 3, 2, 2 and 1, so its row lengths
// are given by the transpose (4,3,1).  Every shape in this library (tableau
// shapes, module types, chain steps) follows this convention.
class Partition {
public:
    Partition() = default;

    // Throws std::invalid_argument unless parts are positive and weakly
    // decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Sorts descending and drops zeros.
    static Partition from_multiset(std::vector<int> parts);

    // Parses "[3,2,2,1]"; "[]" is the empty partition.
    static Partition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }

    // 1-based; zero beyond the length.
    int part(int i) const
    {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Skew diagram outer \ inner; construction requires inner ⊆ outer.
struct SkewShape {
    SkewShape(Partition outer_shape, Partition inner_shape);

    Partition outer;
    Partition inner;

    int size() const { return outer.weight() - inner.weight(); }
};

Partition transpose(const Partition& alpha);

// Natural order on arbitrary partitions: prefix sums of the transposes
// compare with <= (weights may differ).
bool nat_leq(const Partition& alpha, const Partition& beta);

// Natural order on partitions of equal weight: prefix sums of the parts
// compare with >=.  Throws std::invalid_argument on a weight mismatch.
bool nat_leq_same_weight(const Partition& alpha, const Partition& beta);

// inner ⊆ outer, componentwise with zero padding.
bool contains(const Partition& outer, const Partition& inner);

bool is_horizontal_strip(const SkewShape& s);
bool is_vertical_strip(const SkewShape& s);
bool is_rook_strip(const SkewShape& s);

// Multiset union of parts.
Partition union_rowwise(const Partition& alpha, const Partition& beta);

// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

// The square partition (r, ..., r) with r parts.
Partition square(int r);

} // namespace tabord
