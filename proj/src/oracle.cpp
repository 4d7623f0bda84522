#include "kcore/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace kcore::oracle {

namespace {

Partition add_cell(const Partition& p, Cell corner) {
  std::vector<int> parts = p.parts();
  if (corner.row > p.length()) parts.push_back(0);
  parts[static_cast<std::size_t>(corner.row) - 1]++;
  return Partition(std::move(parts));
}

Partition remove_cell(const Partition& p, Cell corner) {
  std::vector<int> parts = p.parts();
  parts[static_cast<std::size_t>(corner.row) - 1]--;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

}  // namespace

std::vector<Partition> up_covers_by_definition(const Partition& lambda, int k) {
  const Partition conj = k_conjugate(lambda, k);
  std::vector<Partition> out;
  for (Cell corner : addable_corners(lambda)) {
    const Partition mu = add_cell(lambda, corner);
    if (!is_k_bounded(mu, k)) continue;
    if (!contains(k_conjugate(mu, k), conj)) continue;
    out.push_back(mu);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> up_covers_by_generators(const Partition& lambda, int k) {
  const Core core = partition_to_core(lambda, k);
  std::vector<Partition> out;
  for (int i = 0; i <= k; ++i) {
    const Core moved = apply_generator(core, i);
    if (moved.shape().sum() <= core.shape().sum()) continue;
    if (!contains(moved.shape(), core.shape())) continue;
    const Partition mu = core_to_partition(moved);
    if (mu.sum() != lambda.sum() + 1) continue;
    out.push_back(mu);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

long long paths_rec(const Partition& p, int k,
                    std::map<Partition, long long>& memo) {
  if (p.empty()) return 1;
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  const Partition conj = k_conjugate(p, k);
  long long total = 0;
  for (Cell corner : removable_corners(p)) {
    const Partition nu = remove_cell(p, corner);
    if (!contains(conj, k_conjugate(nu, k))) continue;
    total += paths_rec(nu, k, memo);
  }
  memo[p] = total;
  return total;
}

}  // namespace

long long chain_count_by_paths(const Partition& lambda, int k) {
  if (!is_k_bounded(lambda, k)) {
    throw std::invalid_argument("partition is not k-bounded");
  }
  std::map<Partition, long long> memo;
  return paths_rec(lambda, k, memo);
}

namespace {

struct FillSearch {
  const Partition* shape = nullptr;
  int k = 1;
  const Composition* alpha = nullptr;
  std::vector<std::vector<int>> rows;
  std::vector<std::set<int>> letter_residues;
  std::vector<KTableau>* out = nullptr;

  int letter(Cell c) const {
    return rows[static_cast<std::size_t>(c.row) - 1]
               [static_cast<std::size_t>(c.col) - 1];
  }

  void run(int r, int c) {
    if (r > shape->length()) {
      for (std::size_t a = 0; a < alpha->size(); ++a) {
        if (static_cast<int>(letter_residues[a].size()) != (*alpha)[a]) return;
      }
      out->push_back(KTableau{k, *shape, rows, *alpha});
      return;
    }
    if (c > shape->part(r)) {
      run(r + 1, 1);
      return;
    }
    const int res = residue({r, c}, k);
    int lo = 1;
    if (c > 1) lo = std::max(lo, letter({r, c - 1}));
    if (r > 1 && shape->part(r - 1) >= c) {
      lo = std::max(lo, letter({r - 1, c}) + 1);
    }
    for (int a = lo; a <= static_cast<int>(alpha->size()); ++a) {
      auto& used = letter_residues[static_cast<std::size_t>(a) - 1];
      const bool fresh = !used.contains(res);
      if (fresh &&
          static_cast<int>(used.size()) >= (*alpha)[static_cast<std::size_t>(a) - 1]) {
        continue;
      }
      if (fresh) used.insert(res);
      rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] = a;
      run(r, c + 1);
      if (fresh) used.erase(res);
    }
    rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] = 0;
  }
};

}  // namespace

std::vector<KTableau> tableaux_by_search(const Partition& lambda,
                                         const Composition& alpha, int k) {
  long long total = 0;
  for (int part : alpha) {
    if (part < 1) throw std::invalid_argument("composition parts must be positive");
    total += part;
  }
  if (total != lambda.sum()) {
    throw std::invalid_argument("composition weight must match the partition");
  }
  const Partition shape = partition_to_core(lambda, k).shape();
  FillSearch search;
  search.shape = &shape;
  search.k = k;
  search.alpha = &alpha;
  search.rows.resize(static_cast<std::size_t>(shape.length()));
  for (int r = 1; r <= shape.length(); ++r) {
    search.rows[static_cast<std::size_t>(r) - 1].assign(
        static_cast<std::size_t>(shape.part(r)), 0);
  }
  search.letter_residues.resize(alpha.size());
  std::vector<KTableau> out;
  search.out = &out;
  search.run(1, 1);
  std::sort(out.begin(), out.end(), [](const KTableau& a, const KTableau& b) {
    return reading_word(a) < reading_word(b);
  });
  return out;
}

namespace {

struct SsytSearch {
  const Partition* shape = nullptr;
  std::vector<int> remaining;
  std::vector<std::vector<int>> rows;
  long long found = 0;

  int letter(Cell c) const {
    return rows[static_cast<std::size_t>(c.row) - 1]
               [static_cast<std::size_t>(c.col) - 1];
  }

  void run(int r, int c) {
    if (r > shape->length()) {
      found++;
      return;
    }
    if (c > shape->part(r)) {
      run(r + 1, 1);
      return;
    }
    int lo = 1;
    if (c > 1) lo = std::max(lo, letter({r, c - 1}));
    if (r > 1 && shape->part(r - 1) >= c) {
      lo = std::max(lo, letter({r - 1, c}) + 1);
    }
    for (int a = lo; a <= static_cast<int>(remaining.size()); ++a) {
      if (remaining[static_cast<std::size_t>(a) - 1] == 0) continue;
      remaining[static_cast<std::size_t>(a) - 1]--;
      rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] = a;
      run(r, c + 1);
      remaining[static_cast<std::size_t>(a) - 1]++;
    }
  }
};

}  // namespace

long long ssyt_count_by_search(const Partition& shape,
                               const Partition& content) {
  if (shape.sum() != content.sum()) {
    throw std::invalid_argument("shape and content weights differ");
  }
  SsytSearch search;
  search.shape = &shape;
  search.remaining = content.parts();
  search.rows.resize(static_cast<std::size_t>(shape.length()));
  for (int r = 1; r <= shape.length(); ++r) {
    search.rows[static_cast<std::size_t>(r) - 1].assign(
        static_cast<std::size_t>(shape.part(r)), 0);
  }
  search.run(1, 1);
  return search.found;
}

long long hook_length_count(const Partition& shape) {
  BigInt numerator = 1;
  for (long long i = 2; i <= shape.sum(); ++i) numerator *= i;
  const SkewShape straight(shape, Partition());
  for (Cell c : cells(shape)) {
    numerator /= hook_length(straight, c);
  }
  return static_cast<long long>(numerator);
}

long long length_by_search(const AffinePermutation& s) {
  const AffinePermutation start = AffinePermutation::identity(s.k());
  if (s == start) return 0;
  std::set<std::vector<long long>> seen{start.window()};
  std::vector<AffinePermutation> frontier{start};
  for (long long depth = 1; depth <= 12; ++depth) {
    std::vector<AffinePermutation> next;
    for (const AffinePermutation& cur : frontier) {
      for (int i = 0; i <= s.k(); ++i) {
        AffinePermutation moved = apply_generator(cur, i, Side::left);
        if (moved == s) return depth;
        if (seen.insert(moved.window()).second) {
          next.push_back(std::move(moved));
        }
      }
    }
    frontier = std::move(next);
  }
  throw std::invalid_argument("element is deeper than the search bound");
}

bool bruhat_leq_by_subwords(const AffinePermutation& a,
                            const AffinePermutation& b) {
  if (a.k() != b.k()) {
    throw std::invalid_argument("permutations belong to different groups");
  }
  const std::vector<int> word = reduced_word(b);
  if (word.size() > 20) {
    throw std::invalid_argument("word is longer than the subword bound");
  }
  const long long target_len = length(a);
  for (unsigned long mask = 0; mask < (1UL << word.size()); ++mask) {
    if (static_cast<long long>(std::popcount(mask)) != target_len) continue;
    std::vector<int> sub;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (mask & (1UL << i)) sub.push_back(word[i]);
    }
    if (from_word(sub, a.k()) == a) return true;
  }
  return false;
}

namespace {

struct ProperFill {
  const Partition* shape = nullptr;
  int k = 1;
  int letters = 0;
  std::vector<int> letter_residue;
  std::vector<std::vector<int>> rows;
  bool found = false;

  int letter(Cell c) const {
    return rows[static_cast<std::size_t>(c.row) - 1]
               [static_cast<std::size_t>(c.col) - 1];
  }

  void run(int r, int c) {
    if (found) return;
    if (r > shape->length()) {
      found = true;
      return;
    }
    if (c > shape->part(r)) {
      run(r + 1, 1);
      return;
    }
    const int res = residue({r, c}, k);
    int lo = 1;
    if (c > 1) lo = std::max(lo, letter({r, c - 1}) + 1);
    if (r > 1 && shape->part(r - 1) >= c) {
      lo = std::max(lo, letter({r - 1, c}) + 1);
    }
    for (int a = lo; a <= letters && !found; ++a) {
      auto& fixed = letter_residue[static_cast<std::size_t>(a) - 1];
      if (fixed != -1 && fixed != res) continue;
      const bool fresh = fixed == -1;
      if (fresh) fixed = res;
      rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] = a;
      run(r, c + 1);
      if (fresh) fixed = -1;
    }
    rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] = 0;
  }
};

}  // namespace

long long min_fill_by_search(const Partition& nu, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  for (int m = 0;; ++m) {
    ProperFill search;
    search.shape = &nu;
    search.k = k;
    search.letters = m;
    search.letter_residue.assign(static_cast<std::size_t>(m), -1);
    search.rows.resize(static_cast<std::size_t>(nu.length()));
    for (int r = 1; r <= nu.length(); ++r) {
      search.rows[static_cast<std::size_t>(r) - 1].assign(
          static_cast<std::size_t>(nu.part(r)), 0);
    }
    search.run(1, 1);
    if (search.found) return m;
  }
}

}  // namespace kcore::oracle
