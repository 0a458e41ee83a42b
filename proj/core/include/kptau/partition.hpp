#pragma once

#include <vector>

namespace kptau {

/// Integer partition: weakly decreasing list of positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    int part(int a) const;  // 1-based, 0 beyond the length

    Partition conjugate() const;

    bool operator==(const Partition&) const = default;
};

/// All partitions of exactly w, ordered lexicographically on the parts vector
/// ((1,1,1) < (2,1) < (3)).
std::vector<Partition> partitions_of(int w);

/// All partitions of weight 0..w, by weight then lexicographically.
std::vector<Partition> partitions_up_to(int w);

}  // namespace kptau
