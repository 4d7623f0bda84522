#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kcore/partition.hpp"

using namespace kcore;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("partition construction validates input") {
  CHECK_NOTHROW(P({}));
  CHECK_NOTHROW(P({4, 2, 1, 1}));
  CHECK_THROWS_AS(P({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(P({-1}), std::invalid_argument);
}

TEST_CASE("partition accessors") {
  const Partition p = P({4, 2, 1, 1});
  CHECK(p.sum() == 8);
  CHECK(p.length() == 4);
  CHECK(p.first() == 4);
  CHECK(p.part(1) == 4);
  CHECK(p.part(4) == 1);
  CHECK(p.part(5) == 0);
  CHECK_THROWS_AS(p.part(0), std::invalid_argument);
  CHECK(Partition().empty());
  CHECK(Partition().sum() == 0);
  CHECK(Partition().first() == 0);
}

TEST_CASE("conjugate transposes the diagram") {
  CHECK(conjugate(P({4, 3, 1})) == P({3, 2, 2, 1}));
  CHECK(conjugate(P({3, 2, 2, 1})) == P({4, 3, 1}));
  CHECK(conjugate(Partition()) == Partition());
  for (const Partition& p : all_partitions(7)) {
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(p).sum() == p.sum());
  }
}

TEST_CASE("containment and dominance") {
  CHECK(contains(P({4, 2, 1}), P({2, 2})));
  CHECK_FALSE(contains(P({4, 2, 1}), P({2, 2, 2})));
  CHECK(contains(P({1}), Partition()));

  CHECK(dominates(P({4}), P({2, 2})));
  CHECK(dominates(P({2, 2}), P({2, 1, 1})));
  CHECK_FALSE(dominates(P({2, 2}), P({3, 1})));
  CHECK(dominates(P({3, 3}), P({3, 3})));
  CHECK_THROWS_AS(dominates(P({2}), P({1})), std::invalid_argument);

  CHECK(is_k_bounded(P({3, 2}), 3));
  CHECK_FALSE(is_k_bounded(P({4, 2}), 3));
  CHECK(is_k_bounded(Partition(), 1));
  CHECK_THROWS_AS(is_k_bounded(P({1}), 0), std::invalid_argument);
}

TEST_CASE("corners come in increasing row order") {
  const Partition p = P({4, 2, 1, 1});
  CHECK(removable_corners(p) == std::vector<Cell>{{1, 4}, {2, 2}, {4, 1}});
  CHECK(addable_corners(p) ==
        std::vector<Cell>{{1, 5}, {2, 3}, {3, 2}, {5, 1}});
  CHECK(addable_corners(Partition()) == std::vector<Cell>{{1, 1}});
  CHECK(removable_corners(Partition()).empty());
}

TEST_CASE("removing an addable corner undoes adding it") {
  for (const Partition& p : all_partitions(6)) {
    for (Cell c : addable_corners(p)) {
      std::vector<int> grown(p.parts());
      if (c.row > p.length()) grown.push_back(0);
      grown[static_cast<std::size_t>(c.row - 1)]++;
      const Partition q(std::move(grown));
      const auto rem = removable_corners(q);
      CHECK(std::find(rem.begin(), rem.end(), c) != rem.end());
    }
  }
}

TEST_CASE("hook lengths") {
  const Partition p = P({4, 3, 1});
  CHECK(hook_length(p, {1, 1}) == 6);
  CHECK(hook_length(p, {1, 2}) == 4);
  CHECK(hook_length(p, {1, 4}) == 1);
  CHECK(hook_length(p, {2, 1}) == 4);
  CHECK(hook_length(p, {3, 1}) == 1);
  CHECK_THROWS_AS(hook_length(p, {1, 5}), std::invalid_argument);

  const SkewShape s(P({4, 3, 1}), P({2, 1}));
  CHECK(hook_length(s, {1, 3}) == 3);
  CHECK(hook_length(s, {2, 2}) == 2);
  CHECK(hook_length(s, {1, 1}) == 3);
  CHECK(s.num_cells() == 5);
  CHECK(s.contains_cell({1, 3}));
  CHECK_FALSE(s.contains_cell({1, 2}));
  CHECK_THROWS_AS(SkewShape(P({2}), P({2, 1})), std::invalid_argument);
}

TEST_CASE("residues cycle along diagonals") {
  CHECK(residue({1, 1}, 3) == 0);
  CHECK(residue({1, 2}, 3) == 1);
  CHECK(residue({2, 1}, 3) == 3);
  CHECK(residue({2, 3}, 3) == 1);
  CHECK(residue({5, 1}, 4) == 1);
  CHECK(residue({1, 7}, 4) == 1);
  for (int c = 1; c <= 9; ++c) {
    CHECK(residue({1, c}, 2) == residue({4, c + 3}, 2));
  }
}

TEST_CASE("horizontal and vertical strips") {
  CHECK(is_horizontal_strip(P({4, 1}), P({2, 1})));
  CHECK_FALSE(is_horizontal_strip(P({2, 1, 1}), P({1})));
  CHECK(is_vertical_strip(P({2, 1, 1}), P({1, 1})));
  CHECK(is_horizontal_strip(P({2, 2}), P({2, 2})));
  CHECK_FALSE(is_horizontal_strip(P({2}), P({3})));
  for (const Partition& outer : all_partitions(6)) {
    for (const Partition& inner : all_partitions(4)) {
      if (!contains(outer, inner)) continue;
      CHECK(is_horizontal_strip(outer, inner) ==
            is_vertical_strip(conjugate(outer), conjugate(inner)));
    }
  }
}

TEST_CASE("adding horizontal strips") {
  const auto grown = add_horizontal_strips(P({2, 1}), 2);
  CHECK(grown == std::vector<Partition>{P({2, 2, 1}), P({3, 1, 1}),
                                        P({3, 2}), P({4, 1})});
  CHECK(add_horizontal_strips(Partition(), 3) ==
        std::vector<Partition>{P({3})});
  CHECK(add_horizontal_strips(P({1}), 0) == std::vector<Partition>{P({1})});
}

TEST_CASE("partition enumeration") {
  CHECK(all_partitions(0) == std::vector<Partition>{Partition()});
  CHECK(all_partitions(5).size() == 7);
  CHECK(all_partitions(8).size() == 22);
  CHECK(k_bounded_partitions(5, 2) ==
        std::vector<Partition>{P({2, 2, 1}), P({2, 1, 1, 1}),
                               P({1, 1, 1, 1, 1})});
  CHECK(all_partitions(3) ==
        std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
  CHECK(k_bounded_partitions(4, 4).size() == all_partitions(4).size());
  for (const Partition& p : all_partitions(6)) CHECK(p.sum() == 6);
}

TEST_CASE("cell listings") {
  CHECK(cells(P({2, 1})) == std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(cells(SkewShape(P({2, 1}), P({1}))) ==
        std::vector<Cell>{{1, 2}, {2, 1}});
  CHECK(cells(Partition()).empty());
}
