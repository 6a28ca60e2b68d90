#pragma once

#include <compare>
#include <string>
#include <vector>

namespace schurq {

// A partition: weakly decreasing sequence of positive integers.
// Partitions are ordered reverse-lexicographically, which is the canonical
// table order used throughout ((4) before (3,1) before (2,2) ...).
class Partition {
  public:
    Partition() = default; // empty partition
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    bool is_strict() const;
    bool is_odd() const;

    // a < b means a precedes b in canonical order (reverse lexicographic).
    bool operator<(const Partition& o) const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

    std::string str() const; // "(3,1)"; empty partition prints "()"
    static Partition parse(const std::string& text);

  private:
    std::vector<int> parts_;
};

enum class PartitionFamily { all, strict, odd };

// Complete, duplicate-free enumeration in canonical order.
// enumerate_partitions(0, f) yields just the empty partition.
std::vector<Partition> enumerate_partitions(int k, PartitionFamily family);

struct PartitionStats {
    int length;
    int sign;    // (-1)^{k - l(nu)}
    int epsilon; // 0 if sign = +1, 1 otherwise (meaningful for strict nu)
    int d;       // l(nu) mod 2
    bool strict;
};

// Throws std::invalid_argument if |nu| != k.
PartitionStats partition_stats(const Partition& nu, int k);

} // namespace schurq
