#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kcore/core.hpp"
#include "kcore/lattice.hpp"
#include "kcore/partition.hpp"

namespace kcore {

// Residue-constrained filling of a core shape. Rows are stored bottom-up:
// cell (r, c) holds rows[r-1][c-1]. Letters weakly increase along rows and
// strictly increase up columns, and letter a occupies exactly evaluation[a-1]
// distinct residues. Standard means evaluation = (1,...,1).
struct KTableau {
  int k = 1;
  Partition shape;
  std::vector<std::vector<int>> rows;
  Composition evaluation;

  friend auto operator<=>(const KTableau&, const KTableau&) = default;
};

// Description of the first violated condition, or nullopt when valid.
std::optional<std::string> tableau_violation(const KTableau& t);
bool is_valid_tableau(const KTableau& t);
bool is_standard(const KTableau& t);

// Rows concatenated bottom row first, each left to right. Distinct valid
// tableaux of one shape have distinct reading words; enumerations sort by it.
std::vector<int> reading_word(const KTableau& t);

// Fills the core of each chain step minus its predecessor with the step
// number. Inverse of gamma_inv.
KTableau gamma(const Chain& chain);

// Shapes left after truncating the filling to letters at most j, mapped back
// to k-bounded partitions.
Chain gamma_inv(const KTableau& t);

std::vector<KTableau> enumerate_standard(const Partition& lambda, int k,
                                         std::size_t limit = no_limit);
std::vector<KTableau> enumerate_semistandard(const Partition& lambda,
                                             const Composition& alpha, int k,
                                             std::size_t limit = no_limit);

// Removes all cells holding the largest letter and the last evaluation part.
KTableau delete_max_letter(const KTableau& t);

// Relabels residue classes from the largest letter down, rightmost cell
// first, producing a standard tableau of the same shape. step_count, when
// given, receives the number of relabeling steps (the total weight).
KTableau standardize(const KTableau& t, long long* step_count = nullptr);

// Least k-bounded-hook count over all cores containing nu.
long long min_fill_count(const Partition& nu, int k);

// Residues of the letters m, m-1, ..., 1 of a standard tableau.
std::vector<int> to_reduced_word(const KTableau& t);

// Letter j fills the cells gained when the j-th letter from the right acts;
// errors unless every step strictly grows the core.
KTableau from_reduced_word(const std::vector<int>& word, int k);

}  // namespace kcore
