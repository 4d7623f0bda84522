#pragma once

#include <optional>
#include <vector>

#include "kcore/partition.hpp"

namespace kcore {

// A partition with no cell of hook length exactly k+1. Validated on
// construction; the error names the first offending cell (bottom-up,
// left-to-right).
class Core {
 public:
  Core(Partition shape, int k);

  const Partition& shape() const { return shape_; }
  int k() const { return k_; }

  friend auto operator<=>(const Core&, const Core&) = default;

 private:
  Partition shape_;
  int k_;
};

// First cell whose hook length equals k+1, if any.
std::optional<Cell> core_violation(const Partition& p, int k);

// Skew diagram with all skew hooks at most k and all hooks of inner cells
// (computed in the skew sense) strictly greater than k.
struct KSkew {
  KSkew(SkewShape shape, int k_bound);

  SkewShape skew;
  int k;
};

// Row counts of the cells with hook length at most k. Inverse of
// partition_to_core.
Partition core_to_partition(const Core& c);

// The sub-partition of cells whose hook lengths exceed k; equals the inner
// shape of the k-skew of core_to_partition(c).
Partition inner_partition(const Core& c);

// Builds the k-skew of a k-bounded partition by placing rows top-down, each
// in the leftmost position creating no hook above k, and returns its outer
// shape.
Core partition_to_core(const Partition& lambda, int k);

KSkew k_skew(const Partition& lambda, int k);

// Row counts of the conjugated core; an involution on k-bounded partitions.
Partition k_conjugate(const Partition& lambda, int k);

// Corners of the given residue, ordered top-left to bottom-right (decreasing
// row). At most one of the two lists is nonempty for any residue.
std::vector<Cell> addable_corners_of_residue(const Core& c, int i);
std::vector<Cell> removable_corners_of_residue(const Core& c, int i);

// Toggles all corners of residue i: adds every addable corner of that
// residue, or removes every removable one; identity when no corner of the
// residue exists. An involution.
Core apply_generator(const Core& c, int i);

// Applies the letters to the empty core, rightmost letter first.
Core core_from_word(const std::vector<int>& word, int k);

}  // namespace kcore
