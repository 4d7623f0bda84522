#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kcore/partition.hpp"

namespace kcore {

using BigInt = boost::multiprecision::cpp_int;

// Square matrix indexed by partitions of n in descending lexicographic
// order, which is dominance-compatible: a partition dominating another
// appears first. Entries are exact.
struct KostkaMatrix {
  int n = 0;
  int k = 1;
  std::vector<Partition> index;
  std::vector<std::vector<BigInt>> entries;
};

// Entry (lambda, mu) counts the semi-standard tableaux of the core shape of
// lambda with evaluation mu, over the k-bounded partitions of n.
KostkaMatrix kostka_matrix(int n, int k);

// Classical Kostka numbers over all partitions of n, by semistandard Young
// tableau counting (horizontal-strip recursion).
KostkaMatrix classical_kostka(int n);

// Exact inverse of kostka_matrix(n, k). Column lambda holds the coefficients
// of the lambda-indexed family member in the homogeneous basis.
KostkaMatrix k_schur_in_h(int n, int k);

// Number of standard tableaux of the core shape of lambda, via path counting
// over the cover relation.
long long standard_count(const Partition& lambda, int k);

struct RearrangementReport {
  long long cases = 0;
  std::vector<std::string> failures;

  bool all_pass() const { return failures.empty(); }
};

// For every partition of n, every rearrangement of its parts, and every
// k-bounded partition of n as shape: compares the tableau count against the
// partition-ordered evaluation.
RearrangementReport rearrangement_check(int n, int k);

}  // namespace kcore
