#include "kcore/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kcore {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i - 1] < parts_[i]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

long long Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int row) const {
  if (row < 1) throw std::invalid_argument("rows are 1-based");
  return row <= length() ? parts_[row - 1] : 0;
}

SkewShape::SkewShape(Partition outer_shape, Partition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
  if (!contains(outer, inner)) {
    throw std::invalid_argument("skew shape requires inner inside outer");
  }
}

bool SkewShape::contains_cell(Cell c) const {
  if (c.row < 1 || c.col < 1) return false;
  return c.col > inner.part(c.row) && c.col <= outer.part(c.row);
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.first()), 0);
  for (int r = 1; r <= p.length(); ++r) {
    for (int j = 0; j < p.part(r); ++j) cols[static_cast<std::size_t>(j)]++;
  }
  return Partition(std::move(cols));
}

bool contains(const Partition& outer, const Partition& inner) {
  for (int r = 1; r <= inner.length(); ++r) {
    if (outer.part(r) < inner.part(r)) return false;
  }
  return true;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.sum() != b.sum()) {
    throw std::invalid_argument("dominance compares partitions of equal weight");
  }
  long long pa = 0;
  long long pb = 0;
  const int rows = std::max(a.length(), b.length());
  for (int r = 1; r <= rows; ++r) {
    pa += a.part(r);
    pb += b.part(r);
    if (pa < pb) return false;
  }
  return true;
}

bool is_k_bounded(const Partition& p, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  return p.first() <= k;
}

std::vector<Cell> addable_corners(const Partition& p) {
  std::vector<Cell> out;
  for (int r = 1; r <= p.length() + 1; ++r) {
    if (r == 1 || p.part(r - 1) > p.part(r)) {
      out.push_back({r, p.part(r) + 1});
    }
  }
  return out;
}

std::vector<Cell> removable_corners(const Partition& p) {
  std::vector<Cell> out;
  for (int r = 1; r <= p.length(); ++r) {
    if (p.part(r) > p.part(r + 1)) out.push_back({r, p.part(r)});
  }
  return out;
}

int hook_length(const SkewShape& s, Cell c) {
  if (c.row < 1 || c.col < 1) throw std::invalid_argument("cells are 1-based");
  if (c.col > s.outer.part(c.row)) {
    throw std::invalid_argument("cell lies outside the outer partition");
  }
  const int arm =
      std::max(0, s.outer.part(c.row) - std::max(s.inner.part(c.row), c.col));
  int leg = 0;
  for (int r = c.row + 1; r <= s.outer.length(); ++r) {
    if (s.contains_cell({r, c.col})) leg++;
  }
  return arm + leg + (s.contains_cell(c) ? 1 : 0);
}

int hook_length(const Partition& p, Cell c) {
  return hook_length(SkewShape(p, Partition()), c);
}

int residue(Cell c, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int n = k + 1;
  return ((c.col - c.row) % n + n) % n;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  for (int r = 1; r <= outer.length(); ++r) {
    if (outer.part(r + 1) > inner.part(r)) return false;
  }
  return true;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  for (int r = 1; r <= outer.length(); ++r) {
    if (outer.part(r) - inner.part(r) > 1) return false;
  }
  return true;
}

namespace {

void strip_rows(const Partition& p, int row, int budget, std::vector<int>& acc,
                std::vector<Partition>& out) {
  if (row == 0) {
    if (budget == 0) {
      std::vector<int> parts;
      for (std::size_t i = acc.size(); i-- > 0;) {
        if (acc[i] > 0) parts.push_back(acc[i]);
      }
      std::reverse(parts.begin(), parts.end());
      out.emplace_back(std::move(parts));
    }
    return;
  }
  const int cap =
      row == 1 ? budget : std::min(budget, p.part(row - 1) - p.part(row));
  for (int add = 0; add <= cap; ++add) {
    acc[static_cast<std::size_t>(row - 1)] = p.part(row) + add;
    strip_rows(p, row - 1, budget - add, acc, out);
  }
}

}  // namespace

std::vector<Partition> add_horizontal_strips(const Partition& p, int r) {
  if (r < 0) throw std::invalid_argument("strip size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> acc(static_cast<std::size_t>(p.length()) + 1, 0);
  strip_rows(p, p.length() + 1, r, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int first = std::min(n, max_part); first >= 1; --first) {
    acc.push_back(first);
    partitions_rec(n - first, first, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, n, acc, out);
  return out;
}

std::vector<Partition> k_bounded_partitions(int n, int k) {
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, std::min(n, k), acc, out);
  return out;
}

std::vector<Cell> cells(const SkewShape& s) {
  std::vector<Cell> out;
  for (int r = 1; r <= s.outer.length(); ++r) {
    for (int j = s.inner.part(r) + 1; j <= s.outer.part(r); ++j) {
      out.push_back({r, j});
    }
  }
  return out;
}

std::vector<Cell> cells(const Partition& p) {
  return cells(SkewShape(p, Partition()));
}

}  // namespace kcore
