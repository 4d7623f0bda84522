#pragma once

#include <vector>

#include "kcore/affine.hpp"
#include "kcore/core.hpp"
#include "kcore/kostka.hpp"
#include "kcore/ktableau.hpp"
#include "kcore/partition.hpp"

// Independent brute-force reference implementations. Each recomputes a
// result of the main modules by a different route, for cross-checking; none
// is tuned for speed.
namespace kcore::oracle {

// Covers straight from the order definition: corner additions keeping both
// the partition and its k-conjugate inside the result's counterparts.
std::vector<Partition> up_covers_by_definition(const Partition& lambda, int k);

// Covers as the strictly growing generator applications on the core.
std::vector<Partition> up_covers_by_generators(const Partition& lambda, int k);

// Path count from the empty partition over the definition-based cover graph.
long long chain_count_by_paths(const Partition& lambda, int k);

// All residue-constrained fillings of the core shape of lambda, by direct
// cell-by-cell search.
std::vector<KTableau> tableaux_by_search(const Partition& lambda,
                                         const Composition& alpha, int k);

// Classical semistandard Young tableaux of the shape and content, counted by
// direct filling search.
long long ssyt_count_by_search(const Partition& shape,
                               const Partition& content);

// Standard Young tableau count by the hook length formula.
long long hook_length_count(const Partition& shape);

// Word length by breadth-first search from the identity. Errors past depth
// twelve.
long long length_by_search(const AffinePermutation& s);

// Bruhat comparison by enumerating subwords of one reduced word of b.
bool bruhat_leq_by_subwords(const AffinePermutation& a,
                            const AffinePermutation& b);

// Least letter count of a proper filling of nu: rows and columns strict,
// repeated letters share a residue.
long long min_fill_by_search(const Partition& nu, int k);

}  // namespace kcore::oracle
