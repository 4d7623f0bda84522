#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace kcore {

// Cells are 1-based. French convention throughout: row 1 is the longest row
// and diagrams grow upward, so "higher" always means larger row index.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Weakly decreasing sequence of positive integers. The empty partition is
// allowed and prints as "-" in the CLI.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  long long sum() const;

  // 1-based part access; rows past the last part have size 0.
  int part(int row) const;
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Pair of nested partitions outer/inner. Validated on construction.
struct SkewShape {
  SkewShape(Partition outer_shape, Partition inner_shape);

  Partition outer;
  Partition inner;

  bool contains_cell(Cell c) const;
  long long num_cells() const { return outer.sum() - inner.sum(); }
};

using Composition = std::vector<int>;

Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);

// Dominance order; both arguments must have the same weight.
bool dominates(const Partition& a, const Partition& b);

bool is_k_bounded(const Partition& p, int k);

// Corner lists are emitted bottom-up, i.e. in increasing row order.
std::vector<Cell> addable_corners(const Partition& p);
std::vector<Cell> removable_corners(const Partition& p);

// Arm = cells of the skew shape strictly right of c in its row, leg = cells
// strictly above in its column, plus one if c itself lies in the skew shape.
// c may lie anywhere, including below the skew shape.
int hook_length(const SkewShape& s, Cell c);
int hook_length(const Partition& p, Cell c);

// (col - row) mod (k+1), normalized to [0, k].
int residue(Cell c, int k);

bool is_horizontal_strip(const Partition& outer, const Partition& inner);
bool is_vertical_strip(const Partition& outer, const Partition& inner);

// All partitions mu containing p with mu/p a horizontal strip of size r.
std::vector<Partition> add_horizontal_strips(const Partition& p, int r);

std::vector<Partition> all_partitions(int n);
std::vector<Partition> k_bounded_partitions(int n, int k);

std::vector<Cell> cells(const SkewShape& s);
std::vector<Cell> cells(const Partition& p);

}  // namespace kcore
