#ifndef GIAMBELLI_PARTITION_HPP
#define GIAMBELLI_PARTITION_HPP

#include <utility>
#include <vector>

#include "giambelli/numeric.hpp"

namespace giambelli {

/// Frobenius coordinates (p_1,...,p_d | q_1,...,q_d) of a Young diagram:
/// p_i = lambda_i - i, q_i = lambda'_i - i for i up to the diagonal length d.
struct FrobeniusCoords {
  std::vector<int> p;
  std::vector<int> q;
  int d() const { return static_cast<int>(p.size()); }
};

/// A partition (Young diagram): nonincreasing positive row lengths.
/// Immutable after construction.
class Partition {
 public:
  Partition() = default;

  /// Canonicalizing constructor: trailing zeros are stripped, increasing or
  /// negative part sequences are rejected.
  static Partition from_parts(const std::vector<int>& parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long size() const;  // number of boxes |lambda|
  bool empty() const { return parts_.empty(); }

  int part(int i) const {  // 1-based, 0 beyond the last row
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  Partition transpose() const;
  bool contains(const Partition& mu) const;

  FrobeniusCoords frobenius() const;
  static Partition from_frobenius(const FrobeniusCoords& fc);

  /// Hook partition (p|q) = (p+1, 1^q).
  static Partition hook(int p, int q);

  /// Contents j - i of all boxes, row by row.
  std::vector<int> contents() const;

  /// dim lambda = number of standard Young tableaux, by the hook length
  /// formula (exact).
  Integer dim_hook() const;

  /// Partitions covering this one in the Young graph, with the content of
  /// the added box.
  std::vector<std::pair<Partition, int>> successors() const;

  /// Corner boxes that can be removed, as (row index 1-based, content).
  std::vector<std::pair<Partition, int>> predecessors() const;

  /// Point configuration on Z' (twice-values, ascending order):
  /// {-b_1, ..., -b_d, a_d, ..., a_1} with a_i = p_i + 1/2, b_i = q_i + 1/2.
  std::vector<int> lattice_config() const;
  static Partition from_lattice_config(const std::vector<int>& twice_points);

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

/// Number of paths mu -> lambda in the Young graph, i.e. standard tableaux
/// of skew shape lambda/mu.  dim_skew(mu, mu) = 1; zero when mu is not
/// contained in lambda.
Integer dim_skew(const Partition& mu, const Partition& lambda);

/// All partitions of n in reverse lexicographic order ((n) first, (1^n) last).
std::vector<Partition> enumerate_partitions(int n);

}  // namespace giambelli

#endif
