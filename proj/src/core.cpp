#include "kcore/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kcore {

namespace {

std::string cell_str(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace

Core::Core(Partition shape, int k) : shape_(std::move(shape)), k_(k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (auto bad = core_violation(shape_, k_)) {
    throw std::invalid_argument("not a valid core: cell " + cell_str(*bad) +
                                " has hook length " + std::to_string(k_ + 1));
  }
}

std::optional<Cell> core_violation(const Partition& p, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const SkewShape straight(p, Partition());
  for (int r = 1; r <= p.length(); ++r) {
    for (int j = 1; j <= p.part(r); ++j) {
      if (hook_length(straight, {r, j}) == k + 1) return Cell{r, j};
    }
  }
  return std::nullopt;
}

KSkew::KSkew(SkewShape shape, int k_bound) : skew(std::move(shape)), k(k_bound) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  for (int r = 1; r <= skew.outer.length(); ++r) {
    for (int j = 1; j <= skew.outer.part(r); ++j) {
      const int h = hook_length(skew, {r, j});
      const bool in_skew = j > skew.inner.part(r);
      if (in_skew && h > k) {
        throw std::invalid_argument("skew cell " + cell_str({r, j}) +
                                    " has hook length above k");
      }
      if (!in_skew && h <= k) {
        throw std::invalid_argument("inner cell " + cell_str({r, j}) +
                                    " has hook length at most k");
      }
    }
  }
}

Partition core_to_partition(const Core& c) {
  const SkewShape straight(c.shape(), Partition());
  std::vector<int> rows;
  for (int r = 1; r <= c.shape().length(); ++r) {
    int count = 0;
    for (int j = 1; j <= c.shape().part(r); ++j) {
      if (hook_length(straight, {r, j}) <= c.k()) count++;
    }
    rows.push_back(count);
  }
  return Partition(std::move(rows));
}

Partition inner_partition(const Core& c) {
  const Partition bounded = core_to_partition(c);
  std::vector<int> rows;
  for (int r = 1; r <= c.shape().length(); ++r) {
    const int excess = c.shape().part(r) - bounded.part(r);
    if (excess > 0) rows.push_back(excess);
  }
  return Partition(std::move(rows));
}

Core partition_to_core(const Partition& lambda, int k) {
  if (!is_k_bounded(lambda, k)) {
    throw std::invalid_argument("partition is not k-bounded");
  }
  const int l = lambda.length();
  std::vector<int> offset(static_cast<std::size_t>(l) + 2, 0);
  std::vector<int> col_count;
  for (int r = l; r >= 1; --r) {
    const int len = lambda.part(r);
    int a = offset[static_cast<std::size_t>(r) + 1];
    for (;; ++a) {
      bool ok = true;
      for (int j = 1; j <= len && ok; ++j) {
        const std::size_t col = static_cast<std::size_t>(a + j);
        const int leg = col <= col_count.size() ? col_count[col - 1] : 0;
        if (len - j + leg + 1 > k) ok = false;
      }
      if (ok) break;
    }
    offset[static_cast<std::size_t>(r)] = a;
    if (col_count.size() < static_cast<std::size_t>(a + len)) {
      col_count.resize(static_cast<std::size_t>(a + len), 0);
    }
    for (int j = 1; j <= len; ++j) col_count[static_cast<std::size_t>(a + j - 1)]++;
  }
  std::vector<int> outer;
  for (int r = 1; r <= l; ++r) {
    outer.push_back(offset[static_cast<std::size_t>(r)] + lambda.part(r));
  }
  return Core(Partition(std::move(outer)), k);
}

KSkew k_skew(const Partition& lambda, int k) {
  const Core outer = partition_to_core(lambda, k);
  return KSkew(SkewShape(outer.shape(), inner_partition(outer)), k);
}

Partition k_conjugate(const Partition& lambda, int k) {
  const Core c = partition_to_core(lambda, k);
  return core_to_partition(Core(conjugate(c.shape()), k));
}

namespace {

std::vector<Cell> corners_of_residue(std::vector<Cell> corners, int i, int k) {
  if (i < 0 || i > k) throw std::invalid_argument("residue out of range");
  std::erase_if(corners, [&](Cell c) { return residue(c, k) != i; });
  std::reverse(corners.begin(), corners.end());
  return corners;
}

}  // namespace

std::vector<Cell> addable_corners_of_residue(const Core& c, int i) {
  return corners_of_residue(addable_corners(c.shape()), i, c.k());
}

std::vector<Cell> removable_corners_of_residue(const Core& c, int i) {
  return corners_of_residue(removable_corners(c.shape()), i, c.k());
}

Core apply_generator(const Core& c, int i) {
  const auto add = addable_corners_of_residue(c, i);
  const auto rem = removable_corners_of_residue(c, i);
  if (!add.empty() && !rem.empty()) {
    throw std::logic_error("residue has both addable and removable corners");
  }
  std::vector<int> parts = c.shape().parts();
  for (Cell cell : add) {
    if (cell.row > static_cast<int>(parts.size())) parts.push_back(0);
    parts[static_cast<std::size_t>(cell.row) - 1]++;
  }
  for (Cell cell : rem) parts[static_cast<std::size_t>(cell.row) - 1]--;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Core(Partition(std::move(parts)), c.k());
}

Core core_from_word(const std::vector<int>& word, int k) {
  Core acc(Partition(), k);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it > k) throw std::invalid_argument("letter out of range");
    acc = apply_generator(acc, *it);
  }
  return acc;
}

}  // namespace kcore
