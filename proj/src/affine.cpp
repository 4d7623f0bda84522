#include "kcore/affine.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kcore {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q--;
  return q;
}

int norm_mod(long long v, int n) {
  return static_cast<int>(((v % n) + n) % n);
}

void check_same_group(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.k() != b.k()) {
    throw std::invalid_argument("permutations belong to different groups");
  }
}

}  // namespace

AffinePermutation::AffinePermutation(std::vector<long long> window, int k)
    : window_(std::move(window)), k_(k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int n = k + 1;
  if (window_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("window must have k+1 entries");
  }
  std::set<int> classes;
  long long sum = 0;
  for (long long v : window_) {
    classes.insert(norm_mod(v, n));
    sum += v;
  }
  if (static_cast<int>(classes.size()) != n) {
    throw std::invalid_argument("window entries must be distinct mod k+1");
  }
  if (sum != static_cast<long long>(n) * (n + 1) / 2) {
    throw std::invalid_argument("window entries must sum to (k+1)(k+2)/2");
  }
}

AffinePermutation AffinePermutation::identity(int k) {
  std::vector<long long> window(static_cast<std::size_t>(k) + 1);
  std::iota(window.begin(), window.end(), 1);
  return AffinePermutation(std::move(window), k);
}

AffinePermutation apply_generator(const AffinePermutation& s, int i,
                                  Side side) {
  const int k = s.k();
  const int n = k + 1;
  if (i < 0 || i > k) throw std::invalid_argument("generator out of range");
  std::vector<long long> w = s.window();
  if (side == Side::right) {
    if (i == 0) {
      const long long first = w.front();
      w.front() = w.back() - n;
      w.back() = first + n;
    } else {
      std::swap(w[static_cast<std::size_t>(i) - 1],
                w[static_cast<std::size_t>(i)]);
    }
  } else {
    const int a = i;
    const int b = (i + 1) % n;
    for (long long& v : w) {
      const int c = norm_mod(v, n);
      if (c == a) {
        v++;
      } else if (c == b) {
        v--;
      }
    }
  }
  return AffinePermutation(std::move(w), k);
}

long long length(const AffinePermutation& s) {
  const int n = s.k() + 1;
  const auto& w = s.window();
  long long total = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      total += std::abs(floor_div(w[b] - w[a], n));
    }
  }
  return total;
}

bool is_min_coset_rep(const AffinePermutation& s) {
  const auto& w = s.window();
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1] > w[i]) return false;
  }
  return true;
}

AffinePermutation from_word(const std::vector<int>& word, int k) {
  AffinePermutation acc = AffinePermutation::identity(k);
  for (int letter : word) acc = apply_generator(acc, letter, Side::right);
  return acc;
}

std::vector<int> reduced_word(const AffinePermutation& s) {
  std::vector<int> word;
  AffinePermutation cur = s;
  long long len = length(cur);
  while (len > 0) {
    bool peeled = false;
    for (int i = 0; i <= s.k(); ++i) {
      AffinePermutation next = apply_generator(cur, i, Side::left);
      if (length(next) == len - 1) {
        word.push_back(i);
        cur = std::move(next);
        len--;
        peeled = true;
        break;
      }
    }
    if (!peeled) throw std::logic_error("no descent found below length");
  }
  return word;
}

namespace {

void words_rec(const AffinePermutation& cur, long long len,
               std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (len == 0) {
    out.push_back(prefix);
    return;
  }
  for (int i = 0; i <= cur.k(); ++i) {
    AffinePermutation next = apply_generator(cur, i, Side::left);
    if (length(next) == len - 1) {
      prefix.push_back(i);
      words_rec(next, len - 1, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<int>> reduced_words(const AffinePermutation& s,
                                            std::size_t bound) {
  const long long len = length(s);
  if (len > static_cast<long long>(bound)) {
    throw std::invalid_argument("length exceeds the reduced-word bound");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  words_rec(s, len, prefix, out);
  return out;
}

Core to_core(const AffinePermutation& s) {
  if (!is_min_coset_rep(s)) {
    throw std::invalid_argument("not a minimal coset representative");
  }
  return core_from_word(reduced_word(s), s.k());
}

std::vector<int> canonical_reduced_word(const Partition& lambda, int k) {
  if (!is_k_bounded(lambda, k)) {
    throw std::invalid_argument("partition is not k-bounded");
  }
  std::vector<int> word;
  for (int r = lambda.length(); r >= 1; --r) {
    for (int c = lambda.part(r); c >= 1; --c) {
      word.push_back(residue({r, c}, k));
    }
  }
  return word;
}

AffinePermutation phi(const Partition& lambda, int k) {
  return from_word(canonical_reduced_word(lambda, k), k);
}

std::vector<AffinePermutation> weak_covers(const AffinePermutation& s) {
  if (!is_min_coset_rep(s)) {
    throw std::invalid_argument("not a minimal coset representative");
  }
  const long long len = length(s);
  std::vector<AffinePermutation> out;
  for (int i = 0; i <= s.k(); ++i) {
    AffinePermutation next = apply_generator(s, i, Side::left);
    if (length(next) == len + 1 && is_min_coset_rep(next)) {
      out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const AffinePermutation& a, const AffinePermutation& b) {
  check_same_group(a, b);
  return contains(to_core(b).shape(), to_core(a).shape());
}

}  // namespace kcore
