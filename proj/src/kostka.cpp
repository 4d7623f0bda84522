#include "kcore/kostka.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "kcore/ktableau.hpp"
#include "kcore/lattice.hpp"

namespace kcore {

namespace {

std::vector<Partition> descending_index(std::vector<Partition> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const Partition& a, const Partition& b) { return b < a; });
  return parts;
}

KostkaMatrix invert_unitriangular(const KostkaMatrix& m) {
  const std::size_t size = m.index.size();
  for (std::size_t i = 0; i < size; ++i) {
    if (m.entries[i][i] != 1) {
      throw std::logic_error("matrix diagonal is not one");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (m.entries[i][j] != 0) {
        throw std::logic_error("matrix is not upper triangular");
      }
    }
  }
  KostkaMatrix inv{m.n, m.k, m.index, {}};
  inv.entries.assign(size, std::vector<BigInt>(size, 0));
  for (std::size_t j = size; j-- > 0;) {
    inv.entries[j][j] = 1;
    for (std::size_t i = j; i-- > 0;) {
      BigInt sum = 0;
      for (std::size_t t = i + 1; t <= j; ++t) {
        sum += m.entries[i][t] * inv.entries[t][j];
      }
      inv.entries[i][j] = -sum;
    }
  }
  return inv;
}

}  // namespace

KostkaMatrix kostka_matrix(int n, int k) {
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  KostkaMatrix m{n, k, descending_index(k_bounded_partitions(n, k)), {}};
  const std::size_t size = m.index.size();
  m.entries.assign(size, std::vector<BigInt>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const Composition alpha = m.index[j].parts();
      m.entries[i][j] =
          static_cast<long long>(enumerate_semistandard(m.index[i], alpha, k).size());
    }
  }
  return m;
}

namespace {

// Partitions nu inside lambda with lambda/nu a horizontal strip of size r.
void strip_removals(const Partition& lambda, int row, int r,
                    std::vector<int>& acc, std::vector<Partition>& out) {
  if (row > lambda.length()) {
    if (r == 0) {
      std::vector<int> parts = acc;
      while (!parts.empty() && parts.back() == 0) parts.pop_back();
      out.emplace_back(std::move(parts));
    }
    return;
  }
  const int high =
      row > 1 ? std::min(lambda.part(row), acc[static_cast<std::size_t>(row) - 2])
              : lambda.part(row);
  const int low = std::max(lambda.part(row + 1), lambda.part(row) - r);
  for (int len = high; len >= low; --len) {
    acc[static_cast<std::size_t>(row) - 1] = len;
    strip_removals(lambda, row + 1, r - (lambda.part(row) - len), acc, out);
  }
}

std::vector<Partition> remove_horizontal_strips(const Partition& lambda, int r) {
  std::vector<Partition> out;
  std::vector<int> acc(static_cast<std::size_t>(lambda.length()), 0);
  strip_removals(lambda, 1, r, acc, out);
  return out;
}

BigInt classical_entry(const Partition& shape, const Composition& content,
                       std::size_t used,
                       std::map<std::pair<Partition, std::size_t>, BigInt>& memo) {
  if (used == 0) return shape.empty() ? 1 : 0;
  const auto key = std::make_pair(shape, used);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt total = 0;
  for (const Partition& nu :
       remove_horizontal_strips(shape, content[used - 1])) {
    total += classical_entry(nu, content, used - 1, memo);
  }
  memo[key] = total;
  return total;
}

}  // namespace

KostkaMatrix classical_kostka(int n) {
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  KostkaMatrix m{n, n == 0 ? 1 : n, descending_index(all_partitions(n)), {}};
  const std::size_t size = m.index.size();
  m.entries.assign(size, std::vector<BigInt>(size, 0));
  std::map<std::pair<Partition, std::size_t>, BigInt> memo;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      memo.clear();
      const Composition content = m.index[j].parts();
      m.entries[i][j] =
          classical_entry(m.index[i], content, content.size(), memo);
    }
  }
  return m;
}

KostkaMatrix k_schur_in_h(int n, int k) {
  return invert_unitriangular(kostka_matrix(n, k));
}

namespace {

long long count_paths(const Partition& p, int k,
                      std::map<Partition, long long>& memo) {
  if (p.empty()) return 1;
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  long long total = 0;
  for (const Partition& q : down_covers(p, k)) {
    total += count_paths(q, k, memo);
  }
  memo[p] = total;
  return total;
}

}  // namespace

long long standard_count(const Partition& lambda, int k) {
  if (!is_k_bounded(lambda, k)) {
    throw std::invalid_argument("partition is not k-bounded");
  }
  std::map<Partition, long long> memo;
  return count_paths(lambda, k, memo);
}

RearrangementReport rearrangement_check(int n, int k) {
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  RearrangementReport report;
  const std::vector<Partition> shapes = k_bounded_partitions(n, k);
  for (const Partition& lambda : all_partitions(n)) {
    std::vector<long long> base;
    base.reserve(shapes.size());
    for (const Partition& mu : shapes) {
      base.push_back(static_cast<long long>(
          admissible_chains(mu, lambda.parts(), k).size()));
    }
    Composition alpha = lambda.parts();
    std::sort(alpha.begin(), alpha.end());
    do {
      for (std::size_t s = 0; s < shapes.size(); ++s) {
        const long long got =
            static_cast<long long>(admissible_chains(shapes[s], alpha, k).size());
        report.cases++;
        if (got != base[s]) {
          std::ostringstream why;
          why << "evaluation (";
          for (std::size_t i = 0; i < alpha.size(); ++i) {
            why << (i ? "," : "") << alpha[i];
          }
          why << ") on shape index " << s << ": " << got
              << " tableaux, expected " << base[s];
          report.failures.push_back(why.str());
        }
      }
    } while (std::next_permutation(alpha.begin(), alpha.end()));
  }
  return report;
}

}  // namespace kcore
