#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace qagt {

/// Box of a Young diagram at row i, column j (both 1-based).  Row indices
/// grow downwards, column indices grow rightwards.
struct Box {
  int row = 1;
  int col = 1;
};

/// Integer partition: weakly decreasing sequence of positive parts.  The
/// empty partition is the unique partition of 0.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int weight() const;                 // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// i-th part, 1-based; 0 for i beyond the length (so arm/leg formulas can
  /// probe boxes outside the diagram).
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
  }
  std::span<const int> parts() const { return parts_; }

  /// j-th part of the conjugate: #{i : lambda_i >= j}; 0 beyond the width.
  int conjugate_part(int j) const;
  Partition conjugate() const;

  std::vector<Box> boxes() const;

  /// Partition with the first (largest) part removed.
  Partition tail() const;
  /// Partition (part, *this); requires part >= largest part.
  Partition prepend(int part) const;

  friend bool operator==(const Partition& a, const Partition& b) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) = default;

  std::string to_string() const;  // "(3,1)", "()" for empty

private:
  std::vector<int> parts_;
};

/// Relative arm length of the box: lambda_i - j.  The box may lie outside
/// the diagram, in which case the value can be negative.
inline int arm(const Partition& p, Box b) { return p.part(b.row) - b.col; }

/// Relative leg length of the box: lambda'_j - i.
inline int leg(const Partition& p, Box b) { return p.conjugate_part(b.col) - b.row; }

/// All partitions of n, each exactly once, in descending lexicographic
/// order (largest first): e.g. n=4 gives (4), (3,1), (2,2), (2,1,1),
/// (1,1,1,1).  This order fixes matrix row/column indexing everywhere.
std::vector<Partition> enumerate_partitions(int n);

/// All ordered pairs (lambda, mu) with |lambda| + |mu| = n, grouped by
/// |lambda| descending from n to 0, each group in enumeration order.
std::vector<std::pair<Partition, Partition>> partition_pairs(int n);

}  // namespace qagt
