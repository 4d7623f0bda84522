#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcore/lattice.hpp"
#include "kcore/oracle.hpp"
#include "kcore/partition.hpp"

using namespace kcore;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

Chain C(int k, std::vector<std::vector<int>> steps) {
  Chain chain;
  chain.k = k;
  for (auto& s : steps) chain.steps.push_back(Partition(std::move(s)));
  return chain;
}

}  // namespace

TEST_CASE("k_addable_corners keep one corner per residue") {
  const auto corners = k_addable_corners(P({4, 2, 1, 1}), 4);
  REQUIRE(corners.size() == 2);
  CHECK(corners[0] == std::pair<Cell, int>{{3, 2}, 4});
  CHECK(corners[1] == std::pair<Cell, int>{{5, 1}, 1});
  CHECK(k_addable_corners(P({1}), 1) ==
        std::vector<std::pair<Cell, int>>{{{2, 1}, 1}});
  CHECK(k_addable_corners(Partition(), 3) ==
        std::vector<std::pair<Cell, int>>{{{1, 1}, 0}});
}

TEST_CASE("covers match the worked example") {
  CHECK(up_covers(P({4, 2, 1, 1}), 4) ==
        std::vector<Partition>{P({4, 2, 2, 1}), P({4, 2, 1, 1, 1})});
  CHECK(down_covers(P({4, 2, 1, 1}), 4) ==
        std::vector<Partition>{P({4, 1, 1, 1}), P({4, 2, 1})});
  CHECK(up_covers(P({1}), 1) == std::vector<Partition>{P({1, 1})});
  CHECK(up_covers(P({2}), 2) == std::vector<Partition>{P({2, 1})});
  CHECK(up_covers(Partition(), 2) == std::vector<Partition>{P({1})});
  CHECK(down_covers(Partition(), 2).empty());
}

TEST_CASE("covers agree with the definitional routes") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 6; ++n) {
      for (const Partition& p : k_bounded_partitions(n, k)) {
        auto fast = up_covers(p, k);
        auto by_def = oracle::up_covers_by_definition(p, k);
        auto by_gen = oracle::up_covers_by_generators(p, k);
        std::sort(fast.begin(), fast.end());
        std::sort(by_def.begin(), by_def.end());
        std::sort(by_gen.begin(), by_gen.end());
        CHECK(fast == by_def);
        CHECK(fast == by_gen);
      }
    }
  }
}

TEST_CASE("up and down covers are dual") {
  for (int k = 1; k <= 3; ++k) {
    for (const Partition& p : k_bounded_partitions(5, k)) {
      for (const Partition& q : up_covers(p, k)) {
        const auto down = down_covers(q, k);
        CHECK(std::find(down.begin(), down.end(), p) != down.end());
      }
    }
  }
}

TEST_CASE("leq is the cover order") {
  CHECK(leq(P({1}), P({2}), 2));
  CHECK(leq(P({2, 1}), P({2, 2}), 2));
  CHECK_FALSE(leq(P({2}), P({1, 1, 1}), 2));
  CHECK(leq(Partition(), P({2, 1}), 2));
  CHECK(leq(P({2, 2}), P({2, 2}), 2));
  CHECK_FALSE(leq(P({2, 2}), P({2, 1}), 2));
}

TEST_CASE("containment does not imply the order") {
  const Partition a = P({2, 2});
  const Partition b = P({3, 2, 1, 1, 1, 1});
  CHECK(contains(b, a));
  CHECK(contains(k_conjugate(b, 3), k_conjugate(a, 3)));
  CHECK_FALSE(leq(a, b, 3));
}

TEST_CASE("containment suffices for small hooks") {
  CHECK(leq(P({2, 1}), P({2, 2}), 3));
  for (const Partition& a : k_bounded_partitions(3, 3)) {
    for (const Partition& b : k_bounded_partitions(5, 3)) {
      if (hook_length(b, {1, 1}) <= 3) {
        CHECK(leq(a, b, 3) == contains(b, a));
      }
    }
  }
}

TEST_CASE("saturated chains enumerate cover paths") {
  const auto chains = saturated_chains(P({3, 2, 1, 1}), 3);
  REQUIRE(chains.size() == 4);
  const Chain known = C(3, {{},
                            {1},
                            {2},
                            {3},
                            {3, 1},
                            {3, 1, 1},
                            {3, 2, 1},
                            {3, 2, 1, 1}});
  CHECK(std::find(chains.begin(), chains.end(), known) != chains.end());
  CHECK(std::is_sorted(chains.begin(), chains.end()));
  for (const Chain& ch : chains) {
    REQUIRE(ch.steps.size() == 8);
    CHECK(ch.steps.front() == Partition());
    CHECK(ch.steps.back() == P({3, 2, 1, 1}));
    for (std::size_t i = 0; i + 1 < ch.steps.size(); ++i) {
      const auto ups = up_covers(ch.steps[i], 3);
      CHECK(std::find(ups.begin(), ups.end(), ch.steps[i + 1]) != ups.end());
    }
    CHECK(chain_evaluation(ch) ==
          Composition{1, 1, 1, 1, 1, 1, 1});
    CHECK(is_admissible_chain(ch));
  }
  CHECK(saturated_chains(Partition(), 2) ==
        std::vector<Chain>{C(2, {{}})});
  CHECK(saturated_chains(P({3, 2, 1, 1}), 3).size() ==
        static_cast<std::size_t>(
            oracle::chain_count_by_paths(P({3, 2, 1, 1}), 3)));
}

TEST_CASE("chain enumeration respects the limit") {
  CHECK_THROWS_AS(saturated_chains(P({3, 2, 1, 1}), 3, 2), EnumerationLimit);
  CHECK_NOTHROW(saturated_chains(P({3, 2, 1, 1}), 3, 4));
}

TEST_CASE("r_admissible pairs horizontal and vertical strips") {
  CHECK(r_admissible(P({3, 1}), P({1}), 3, 3));
  CHECK(r_admissible(P({3, 3, 1}), P({3, 2}), 2, 3));
  CHECK(r_admissible(P({2}), Partition(), 2, 2));
  CHECK(r_admissible(P({1}), Partition(), 1, 1));
  CHECK_FALSE(r_admissible(P({2, 1, 1}), P({1}), 3, 3));
  CHECK_FALSE(r_admissible(P({1, 1}), Partition(), 2, 2));
  CHECK_FALSE(r_admissible(P({2}), Partition(), 1, 2));
  CHECK_THROWS_AS(r_admissible(P({3}), Partition(), 3, 2),
                  std::invalid_argument);
}

TEST_CASE("admissible chains for a composition") {
  const Composition alpha{1, 3, 1, 2, 1, 1};
  const auto chains = admissible_chains(P({3, 3, 2, 1}), alpha, 3);
  REQUIRE(chains.size() == 3);
  const Chain known = C(3, {{},
                            {1},
                            {3, 1},
                            {3, 2},
                            {3, 3, 1},
                            {3, 3, 1, 1},
                            {3, 3, 2, 1}});
  CHECK(std::find(chains.begin(), chains.end(), known) != chains.end());
  CHECK(std::is_sorted(chains.begin(), chains.end()));
  for (const Chain& ch : chains) {
    CHECK(chain_evaluation(ch) == alpha);
    CHECK(is_admissible_chain(ch));
  }
}

TEST_CASE("unit compositions recover saturated chains") {
  const Composition ones{1, 1, 1, 1, 1};
  for (const Partition& p : k_bounded_partitions(5, 2)) {
    CHECK(admissible_chains(p, ones, 2) == saturated_chains(p, 2));
  }
}

TEST_CASE("hasse_dot emits the cover digraph") {
  const std::string dot = hasse_dot(2, 1);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("p -> p1;") != std::string::npos);
  CHECK(dot.find("p1 -> p1_1;") != std::string::npos);
  CHECK(dot.find("p1_1 ->") == std::string::npos);
}
