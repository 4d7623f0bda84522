#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kcore/core.hpp"
#include "kcore/partition.hpp"

namespace kcore {

// Thrown when an enumeration exceeds a caller-supplied result cap.
struct EnumerationLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t no_limit = std::numeric_limits<std::size_t>::max();

// Saturated or admissible chain from the empty partition.
struct Chain {
  int k = 1;
  std::vector<Partition> steps;

  friend auto operator<=>(const Chain&, const Chain&) = default;
};

// steps.front() is empty, consecutive degrees strictly increase, every
// consecutive pair is admissible for its degree difference.
bool is_admissible_chain(const Chain& chain);

// Degree increments of consecutive steps.
Composition chain_evaluation(const Chain& chain);

// Addable corners of lambda whose corresponding addable corner of the core
// (same row) is the highest addable corner of its residue; paired with that
// residue. Adding any of them gives an up cover.
std::vector<std::pair<Cell, int>> k_addable_corners(const Partition& lambda,
                                                    int k);

// Covers are emitted in increasing corner-row order.
std::vector<Partition> up_covers(const Partition& lambda, int k);
std::vector<Partition> down_covers(const Partition& lambda, int k);

// Order relation generated by the covers; memoized upward search pruned by
// containment of the partitions and of their conjugates under k-conjugation.
bool leq(const Partition& a, const Partition& b, int k);

// All cover-by-cover chains from the empty partition to lambda, ordered
// lexicographically by their step sequences.
std::vector<Chain> saturated_chains(const Partition& lambda, int k,
                                    std::size_t limit = no_limit);

// larger/smaller is a horizontal r-strip and the k-conjugates differ by a
// vertical r-strip.
bool r_admissible(const Partition& larger, const Partition& smaller, int r,
                  int k);

// All chains from the empty partition to lambda whose j-th step is an
// alpha_j-admissible pair, in lexicographic order. With alpha = (1,...,1)
// this equals saturated_chains.
std::vector<Chain> admissible_chains(const Partition& lambda,
                                     const Composition& alpha, int k,
                                     std::size_t limit = no_limit);

// DOT digraph (rankdir=BT) of the k-bounded partitions of degree up to n_max
// with cover edges.
std::string hasse_dot(int n_max, int k);

}  // namespace kcore
