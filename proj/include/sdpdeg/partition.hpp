#pragma once

#include <string>
#include <vector>

namespace sdpdeg {

/// Weakly decreasing sequence of nonnegative integers with significant
/// trailing zeros: (2,1) and (2,1,0) are distinct values. Equality compares
/// lengths as well as parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    std::size_t length() const { return parts_.size(); }
    int part(std::size_t i) const { return parts_[i]; }
    const std::vector<int>& parts() const { return parts_; }
    int weight() const;

    /// parts strictly decreasing (the last part may be 0).
    bool strict() const;

    /// Componentwise sum; lengths must match.
    Partition add(const Partition& other) const;

    /// Copy with a trailing 0 appended / the trailing part dropped.
    Partition append_zero() const;
    Partition drop_last() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

    std::string str() const;

  private:
    std::vector<int> parts_;
};

/// Staircase (k, k-1, ..., 1) of length k; requires k >= 1.
Partition rho(int k);

/// Staircase with zero (k, k-1, ..., 1, 0) of length k+1; k >= 0.
Partition rho0(int k);

/// All weakly decreasing length-L sequences of nonnegative integers with
/// weight <= W, each exactly once, in lexicographic-descending order.
std::vector<Partition> enumerate_partitions(int length, int max_weight);

}  // namespace sdpdeg
