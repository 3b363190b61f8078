#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ellhyp {

/// A partition with an explicit number of parts (trailing zeros kept), as
/// used to index the multivariable series.
class Partition {
 public:
  /// Throws InvalidArgument unless `parts` is weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);

  /// The all-equal partition (value^nparts), e.g. the rectangle (N^n).
  static Partition rectangle(int nparts, int value);

  int nparts() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const noexcept { return parts_; }

  /// |lambda|
  int size() const noexcept;
  /// n(lambda) = sum (i-1) lambda_i
  int weighted_size() const noexcept;
  /// Number of parts equal to `value`.
  int multiplicity(int value) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Visits every partition with `nparts` parts bounded by `cap`, in
/// lexicographic order of the part vector. Throws InvalidArgument outside nparts in [1,6], cap in [0,8].
void for_each_partition(int nparts, int cap, const std::function<void(const Partition&)>& visit);

/// Materialized form of for_each_partition; size is C(cap + nparts, nparts).
std::vector<Partition> enumerate_partitions(int nparts, int cap);

}  // namespace ellhyp
