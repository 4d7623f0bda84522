#pragma once

#include <cstddef>
#include <vector>

#include "kcore/core.hpp"
#include "kcore/partition.hpp"

namespace kcore {

enum class Side { left, right };

// Affine permutation in window notation: the values at positions 1..k+1,
// extended to all integers by adding k+1 to both position and value. Window
// entries are pairwise distinct mod k+1 and sum to (k+1)(k+2)/2.
class AffinePermutation {
 public:
  AffinePermutation(std::vector<long long> window, int k);

  static AffinePermutation identity(int k);

  const std::vector<long long>& window() const { return window_; }
  int k() const { return k_; }

  friend auto operator<=>(const AffinePermutation&,
                          const AffinePermutation&) = default;

 private:
  std::vector<long long> window_;
  int k_;
};

// Right action permutes positions i, i+1 (position 0 wrapping to k+1 with a
// shift); left action swaps the value classes i and i+1 mod k+1.
AffinePermutation apply_generator(const AffinePermutation& s, int i, Side side);

// Affine inversion count; the minimal word length.
long long length(const AffinePermutation& s);

// True iff the window is strictly increasing: no right descent among the
// generators 1..k, i.e. the minimal representative of its coset.
bool is_min_coset_rep(const AffinePermutation& s);

// Evaluates the word left to right by right multiplication, so the result is
// the product of the generators in the order written.
AffinePermutation from_word(const std::vector<int>& word, int k);

// One reduced word, peeling the smallest left descent first.
std::vector<int> reduced_word(const AffinePermutation& s);

// All reduced words, in lexicographic order. Errors when length(s) exceeds
// the bound.
std::vector<std::vector<int>> reduced_words(const AffinePermutation& s,
                                            std::size_t bound = 12);

// Acts any reduced word on the empty core (rightmost letter first). Requires
// a minimal coset representative.
Core to_core(const AffinePermutation& s);

// Residues of lambda read row by row from the top row down, each row right
// to left. Evaluating it gives phi(lambda).
std::vector<int> canonical_reduced_word(const Partition& lambda, int k);

AffinePermutation phi(const Partition& lambda, int k);

// Left multiplications raising length whose result stays a minimal coset
// representative; requires one as input. Sorted by window.
std::vector<AffinePermutation> weak_covers(const AffinePermutation& s);

// Bruhat order on minimal coset representatives, computed as containment of
// the associated cores.
bool bruhat_leq(const AffinePermutation& a, const AffinePermutation& b);

}  // namespace kcore
