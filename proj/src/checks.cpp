#include "kcore/checks.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kcore/affine.hpp"
#include "kcore/core.hpp"
#include "kcore/io.hpp"
#include "kcore/kostka.hpp"
#include "kcore/ktableau.hpp"
#include "kcore/lattice.hpp"
#include "kcore/oracle.hpp"
#include "kcore/partition.hpp"

namespace kcore {

namespace {

constexpr std::size_t max_recorded_failures = 25;

struct Suite {
  CheckResult result;

  explicit Suite(std::string name) { result.suite = std::move(name); }

  template <typename F>
  void expect(bool ok, F&& describe) {
    ++result.checks;
    if (ok) return;
    if (result.failures.size() < max_recorded_failures) {
      result.failures.push_back(describe());
    } else if (result.failures.size() == max_recorded_failures) {
      result.failures.push_back("more failures suppressed");
    }
  }
};

std::string cell_str(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string tag(int k_val, const Partition& p) {
  return "k=" + std::to_string(k_val) + " " + partition_to_string(p);
}

std::vector<Partition> partitions_up_to(int n, int k_val) {
  std::vector<Partition> out;
  for (int d = 0; d <= n; ++d) {
    auto layer = k_bounded_partitions(d, k_val);
    for (Partition& p : layer) out.push_back(std::move(p));
  }
  return out;
}

std::set<Cell> cell_set(const Partition& p) {
  const auto v = cells(p);
  return {v.begin(), v.end()};
}

void compositions_rec(int remaining, int max_part, Composition& acc,
                      std::vector<Composition>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    acc.push_back(part);
    compositions_rec(remaining - part, max_part, acc, out);
    acc.pop_back();
  }
}

std::vector<Composition> compositions(int total, int max_part) {
  std::vector<Composition> out;
  Composition acc;
  compositions_rec(total, max_part, acc, out);
  return out;
}

// ---------------------------------------------------------------------------

void check_partition(int n, Suite& s) {
  const int pair_cap = std::min(n, 8);
  for (int d = 0; d <= n; ++d) {
    const auto layer = all_partitions(d);
    for (const Partition& p : layer) {
      const std::string id = partition_to_string(p);
      const Partition pc = conjugate(p);
      s.expect(conjugate(pc) == p,
               [&] { return id + ": conjugate is not an involution"; });
      s.expect(pc.sum() == p.sum(),
               [&] { return id + ": conjugate changes the degree"; });
      s.expect(pc.length() == p.first() && pc.first() == p.length(),
               [&] { return id + ": conjugate length/first part duality"; });
      s.expect(addable_corners(p).size() == removable_corners(p).size() + 1,
               [&] { return id + ": addable corners are not removable + 1"; });
      for (Cell c : cells(p)) {
        const int arm = p.part(c.row) - c.col;
        const int leg = pc.part(c.col) - c.row;
        s.expect(hook_length(p, c) == arm + leg + 1, [&] {
          return id + ": hook at " + cell_str(c) + " is not arm + leg + 1";
        });
      }
    }
    if (d > pair_cap) continue;
    for (const Partition& p : layer) {
      const std::string id = partition_to_string(p);
      s.expect(dominates(p, p), [&] { return id + ": dominance not reflexive"; });
      if (!p.empty()) {
        s.expect(dominates(Partition({d}), p),
                 [&] { return id + ": one-row partition does not dominate"; });
        s.expect(dominates(p, Partition(std::vector<int>(d, 1))),
                 [&] { return id + ": does not dominate the one-column partition"; });
      }
      for (const Partition& q : layer) {
        if (p != q) {
          s.expect(!(dominates(p, q) && dominates(q, p)), [&] {
            return id + " / " + partition_to_string(q) +
                   ": dominance not antisymmetric";
          });
        }
      }
      for (int r = 0; d + r <= pair_cap; ++r) {
        const auto got = add_horizontal_strips(p, r);
        for (std::size_t t = 0; t + 1 < got.size(); ++t) {
          s.expect(got[t] < got[t + 1],
                   [&] { return id + ": strip additions not sorted"; });
        }
        std::vector<Partition> want;
        for (const Partition& q : all_partitions(d + r)) {
          s.expect(is_horizontal_strip(q, p) ==
                       is_vertical_strip(conjugate(q), conjugate(p)),
                   [&] {
                     return id + " / " + partition_to_string(q) +
                            ": strip notions not conjugate-dual";
                   });
          if (is_horizontal_strip(q, p)) want.push_back(q);
        }
        std::sort(want.begin(), want.end());
        s.expect(got == want, [&] {
          return id + ": horizontal " + std::to_string(r) +
                 "-strip additions disagree with the filtered enumeration";
        });
      }
    }
  }
}

void check_skew(int n, int k_val, Suite& s) {
  for (int d = 0; d <= n; ++d) {
    for (const Partition& lambda : k_bounded_partitions(d, k_val)) {
      const std::string id = tag(k_val, lambda);
      const KSkew ks = k_skew(lambda, k_val);
      const Partition& outer = ks.skew.outer;
      const Partition& inner = ks.skew.inner;
      s.expect(outer.length() == lambda.length(),
               [&] { return id + ": skew row count differs from the partition"; });
      for (int r = 1; r <= outer.length(); ++r) {
        s.expect(outer.part(r) - inner.part(r) == lambda.part(r), [&] {
          return id + ": skew row " + std::to_string(r) +
                 " does not have the partition's length";
        });
      }
      const Partition oc = conjugate(outer);
      const Partition ic = conjugate(inner);
      for (int c = 1; c < outer.first(); ++c) {
        s.expect(oc.part(c) - ic.part(c) >= oc.part(c + 1) - ic.part(c + 1),
                 [&] {
                   return id + ": skew column lengths increase at column " +
                          std::to_string(c);
                 });
      }
      for (Cell c : cells(ks.skew)) {
        s.expect(hook_length(ks.skew, c) <= k_val, [&] {
          return id + ": skew hook at " + cell_str(c) + " exceeds the bound";
        });
      }
      for (Cell c : cells(inner)) {
        s.expect(hook_length(ks.skew, c) > k_val, [&] {
          return id + ": hook below the skew at " + cell_str(c) +
                 " is within the bound";
        });
      }
      s.expect(partition_to_core(lambda, k_val).shape() == outer,
               [&] { return id + ": skew outer shape is not the core"; });
      s.expect(!core_violation(outer, k_val).has_value(),
               [&] { return id + ": skew outer shape is not a core"; });
      if (outer.sum() <= 10) {
        const auto squares = cells(outer);
        const auto below = cell_set(inner);
        for (Cell a : squares) {
          for (Cell b : squares) {
            if (a == b || a.row > b.row || a.col > b.col) continue;
            const int ha = hook_length(ks.skew, a);
            const int hb = hook_length(ks.skew, b);
            s.expect(ha >= hb, [&] {
              return id + ": skew hooks grow north-east from " + cell_str(a) +
                     " to " + cell_str(b);
            });
            if (!below.count(b)) {
              s.expect(ha > hb, [&] {
                return id + ": skew hooks tie from " + cell_str(a) + " to " +
                       cell_str(b);
              });
            }
          }
        }
      }
    }
  }
}

void check_core_bijection(int n, int k_val, Suite& s) {
  const int n1 = k_val + 1;
  for (int d = 0; d <= n; ++d) {
    for (const Partition& lambda : k_bounded_partitions(d, k_val)) {
      const std::string id = tag(k_val, lambda);
      const Core c = partition_to_core(lambda, k_val);
      s.expect(core_to_partition(c) == lambda,
               [&] { return id + ": core round trip fails"; });
      for (Cell cc : cells(c.shape())) {
        s.expect(hook_length(c.shape(), cc) % n1 != 0, [&] {
          return id + ": core hook at " + cell_str(cc) +
                 " is a multiple of " + std::to_string(n1);
        });
      }
      const Partition w = k_conjugate(lambda, k_val);
      s.expect(w.sum() == lambda.sum() && is_k_bounded(w, k_val),
               [&] { return id + ": conjugation leaves the bounded family"; });
      s.expect(k_conjugate(w, k_val) == lambda,
               [&] { return id + ": conjugation is not an involution"; });
      s.expect(partition_to_core(w, k_val).shape() == conjugate(c.shape()),
               [&] { return id + ": conjugate core mismatch"; });
      if (!lambda.empty() && hook_length(lambda, Cell{1, 1}) <= k_val) {
        s.expect(w == conjugate(lambda), [&] {
          return id + ": small main hook but conjugations differ";
        });
      }
      s.expect(inner_partition(c) == k_skew(lambda, k_val).skew.inner,
               [&] { return id + ": long-hook cells differ from skew inner"; });
    }
  }
  std::vector<Core> cores;
  std::vector<long long> degrees;
  for (int d = 0; d <= 12; ++d) {
    for (const Partition& p : all_partitions(d)) {
      if (core_violation(p, k_val).has_value()) continue;
      Core c(p, k_val);
      s.expect(partition_to_core(core_to_partition(c), k_val) == c, [&] {
        return "k=" + std::to_string(k_val) + " core " + partition_to_string(p) +
               ": reverse round trip fails";
      });
      degrees.push_back(core_to_partition(c).sum());
      cores.push_back(std::move(c));
    }
  }
  for (std::size_t i = 0; i < cores.size(); ++i) {
    for (std::size_t j = 0; j < cores.size(); ++j) {
      if (i == j || !contains(cores[j].shape(), cores[i].shape())) continue;
      s.expect(degrees[i] < degrees[j], [&] {
        return "k=" + std::to_string(k_val) + " cores " +
               partition_to_string(cores[i].shape()) + " in " +
               partition_to_string(cores[j].shape()) +
               ": bounded-hook count does not grow strictly";
      });
    }
  }
  const auto P = partitions_up_to(std::min(n, 8), k_val);
  std::vector<Partition> shapes;
  shapes.reserve(P.size());
  for (const Partition& p : P) shapes.push_back(partition_to_core(p, k_val).shape());
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = 0; j < P.size(); ++j) {
      if (!contains(P[j], P[i])) continue;
      s.expect(contains(shapes[j], shapes[i]), [&] {
        return tag(k_val, P[i]) + " in " + partition_to_string(P[j]) +
               ": cores not nested";
      });
    }
  }
}

void expect_corner_string(Suite& s, const std::vector<Cell>& corners, int i,
                          int k_val, const std::string& id, const char* kind) {
  for (std::size_t t = 0; t < corners.size(); ++t) {
    s.expect(residue(corners[t], k_val) == i, [&] {
      return id + ": " + kind + " corner " + cell_str(corners[t]) +
             " has the wrong residue";
    });
    if (t + 1 < corners.size()) {
      const Cell a = corners[t];
      const Cell b = corners[t + 1];
      s.expect(a.row > b.row && a.col < b.col &&
                   (b.col - b.row) - (a.col - a.row) == k_val + 1,
               [&] {
                 return id + ": " + kind + " corners " + cell_str(a) + ", " +
                        cell_str(b) + " do not form a string";
               });
    }
  }
}

void expect_hook_flip(Suite& s, const Core& small_core, const Core& big_core,
                      const std::vector<Cell>& corner_string,
                      const std::string& id) {
  const std::set<Cell> small_inner = cell_set(inner_partition(small_core));
  const std::set<Cell> big_inner = cell_set(inner_partition(big_core));
  const bool nested = std::includes(big_inner.begin(), big_inner.end(),
                                    small_inner.begin(), small_inner.end());
  std::set<Cell> diff;
  for (Cell c : big_inner) {
    if (!small_inner.count(c)) diff.insert(c);
  }
  std::set<Cell> meets;
  for (std::size_t t = 0; t + 1 < corner_string.size(); ++t) {
    meets.insert(Cell{corner_string[t + 1].row, corner_string[t].col});
  }
  s.expect(nested && diff == meets, [&] {
    return id + ": long-hook cells do not change exactly at the corner meets";
  });
}

void expect_one_row_change(Suite& s, const Partition& before,
                           const Partition& after, int r, int delta,
                           const std::string& id) {
  bool match = false;
  if (r >= 1 && r <= before.length() + 1) {
    std::vector<int> moved = before.parts();
    if (r == before.length() + 1) moved.push_back(0);
    moved[static_cast<std::size_t>(r) - 1] += delta;
    while (!moved.empty() && moved.back() == 0) moved.pop_back();
    match = after.parts() == moved;
  }
  s.expect(match, [&] {
    return id + ": generator does not shift exactly row " + std::to_string(r);
  });
}

void expect_one_entry_change(Suite& s, const Partition& a, const Partition& b,
                             const std::string& id) {
  const std::size_t len =
      std::max(a.parts().size(), b.parts().size());
  int changed = 0;
  bool unit = true;
  for (std::size_t t = 1; t <= len; ++t) {
    const int diff = b.part(static_cast<int>(t)) - a.part(static_cast<int>(t));
    if (diff != 0) {
      ++changed;
      if (diff != 1 && diff != -1) unit = false;
    }
  }
  s.expect(changed == 1 && unit, [&] {
    return id + ": conjugate side does not change in exactly one row";
  });
}

void check_generators(int n, int k_val, Suite& s) {
  const int n1 = k_val + 1;
  if (k_val <= 4) {
    for (int d = 0; d <= 12; ++d) {
      for (const Partition& p : all_partitions(d)) {
        if (core_violation(p, k_val).has_value()) continue;
        const Core c(p, k_val);
        const std::string id =
            "k=" + std::to_string(k_val) + " core " + partition_to_string(p);
        for (int i = 0; i <= k_val; ++i) {
          s.expect(apply_generator(apply_generator(c, i), i) == c, [&] {
            return id + ": generator " + std::to_string(i) +
                   " is not an involution";
          });
          for (int j = i + 1; j <= k_val; ++j) {
            const int diff = (j - i) % n1;
            if (diff != 1 && diff != k_val) {
              s.expect(apply_generator(apply_generator(c, i), j) ==
                           apply_generator(apply_generator(c, j), i),
                       [&] {
                         return id + ": generators " + std::to_string(i) +
                                "," + std::to_string(j) + " do not commute";
                       });
            } else if (k_val >= 2) {
              const Core lhs = apply_generator(
                  apply_generator(apply_generator(c, i), j), i);
              const Core rhs = apply_generator(
                  apply_generator(apply_generator(c, j), i), j);
              s.expect(lhs == rhs, [&] {
                return id + ": braid relation fails for " + std::to_string(i) +
                       "," + std::to_string(j);
              });
            }
          }
        }
      }
    }
  }
  for (int d = 0; d <= std::min(n, 8); ++d) {
    for (const Partition& lambda : k_bounded_partitions(d, k_val)) {
      const std::string id = tag(k_val, lambda);
      const Core c = partition_to_core(lambda, k_val);
      const Partition kc = k_conjugate(lambda, k_val);
      for (int i = 0; i <= k_val; ++i) {
        const auto add = addable_corners_of_residue(c, i);
        const auto rem = removable_corners_of_residue(c, i);
        s.expect(add.empty() || rem.empty(), [&] {
          return id + ": residue " + std::to_string(i) +
                 " has both addable and removable corners";
        });
        expect_corner_string(s, add, i, k_val, id, "addable");
        expect_corner_string(s, rem, i, k_val, id, "removable");
        if (add.empty() && rem.empty()) {
          s.expect(apply_generator(c, i) == c, [&] {
            return id + ": generator " + std::to_string(i) +
                   " moves a core with no corner of its residue";
          });
          continue;
        }
        const Core moved = apply_generator(c, i);
        const Partition after = core_to_partition(moved);
        if (!add.empty()) {
          expect_one_row_change(s, lambda, after, add.front().row, 1, id);
          expect_hook_flip(s, c, moved, add, id);
        } else {
          expect_one_row_change(s, lambda, after, rem.front().row, -1, id);
          expect_hook_flip(s, moved, c, rem, id);
        }
        expect_one_entry_change(s, kc, k_conjugate(after, k_val), id);
      }
    }
  }
}

Partition grow_at(const Partition& p, Cell c) {
  std::vector<int> parts = p.parts();
  if (c.row == p.length() + 1) {
    parts.push_back(1);
  } else {
    parts[static_cast<std::size_t>(c.row) - 1] += 1;
  }
  return Partition(std::move(parts));
}

void check_covers(int n, int k_val, Suite& s) {
  for (int d = 0; d <= std::min(n, 9); ++d) {
    for (const Partition& lambda : k_bounded_partitions(d, k_val)) {
      const std::string id = tag(k_val, lambda);
      const auto ups = up_covers(lambda, k_val);
      std::vector<Partition> sorted_ups = ups;
      std::sort(sorted_ups.begin(), sorted_ups.end());
      s.expect(sorted_ups == oracle::up_covers_by_definition(lambda, k_val),
               [&] { return id + ": covers disagree with the order definition"; });
      s.expect(sorted_ups == oracle::up_covers_by_generators(lambda, k_val),
               [&] { return id + ": covers disagree with the generator route"; });
      const auto corners = k_addable_corners(lambda, k_val);
      s.expect(corners.size() == ups.size(),
               [&] { return id + ": corner and cover counts differ"; });
      const Core c = partition_to_core(lambda, k_val);
      for (std::size_t t = 0; t < corners.size() && t < ups.size(); ++t) {
        s.expect(grow_at(lambda, corners[t].first) == ups[t], [&] {
          return id + ": corner " + cell_str(corners[t].first) +
                 " does not give the matching cover";
        });
        const auto adds = addable_corners_of_residue(c, corners[t].second);
        s.expect(!adds.empty() && adds.front().row == corners[t].first.row,
                 [&] {
                   return id + ": corner " + cell_str(corners[t].first) +
                          " is not the highest of its residue";
                 });
      }
      for (const Partition& mu : ups) {
        s.expect(is_k_bounded(mu, k_val) && mu.sum() == lambda.sum() + 1,
                 [&] { return id + ": cover leaves the bounded family"; });
        const auto downs = down_covers(mu, k_val);
        s.expect(std::find(downs.begin(), downs.end(), lambda) != downs.end(),
                 [&] {
                   return id + " under " + partition_to_string(mu) +
                          ": up/down duality fails";
                 });
        s.expect(r_admissible(mu, lambda, 1, k_val), [&] {
          return id + " under " + partition_to_string(mu) +
                 ": cover is not a 1-admissible pair";
        });
      }
      for (const Partition& nu : down_covers(lambda, k_val)) {
        const auto back = up_covers(nu, k_val);
        s.expect(std::find(back.begin(), back.end(), lambda) != back.end(),
                 [&] {
                   return id + " over " + partition_to_string(nu) +
                          ": down/up duality fails";
                 });
      }
    }
  }
}

void check_order(int n, int k_val, Suite& s) {
  const int cap = std::min(n, 8);
  const auto P = partitions_up_to(cap, k_val);
  std::map<Partition, std::size_t> pos;
  for (std::size_t i = 0; i < P.size(); ++i) pos.emplace(P[i], i);
  std::vector<std::vector<char>> reach(P.size(),
                                       std::vector<char>(P.size(), 0));
  for (std::size_t i = P.size(); i-- > 0;) {
    reach[i][i] = 1;
    if (P[i].sum() >= cap) continue;
    for (const Partition& mu : oracle::up_covers_by_definition(P[i], k_val)) {
      const std::size_t j = pos.at(mu);
      for (std::size_t t = 0; t < P.size(); ++t) {
        if (reach[j][t]) reach[i][t] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = 0; j < P.size(); ++j) {
      const bool got = leq(P[i], P[j], k_val);
      s.expect(got == static_cast<bool>(reach[i][j]), [&] {
        return tag(k_val, P[i]) + " vs " + partition_to_string(P[j]) +
               ": order disagrees with the cover closure";
      });
      if (got) {
        s.expect(contains(P[j], P[i]) &&
                     contains(k_conjugate(P[j], k_val),
                              k_conjugate(P[i], k_val)),
                 [&] {
                   return tag(k_val, P[i]) + " vs " + partition_to_string(P[j]) +
                          ": comparable pair not nested on both sides";
                 });
      }
      if (P[j].empty() || hook_length(P[j], Cell{1, 1}) <= k_val) {
        s.expect(got == contains(P[j], P[i]), [&] {
          return tag(k_val, P[i]) + " vs " + partition_to_string(P[j]) +
                 ": small main hook but order differs from containment";
        });
      }
    }
  }
  if (k_val == 3 && n >= 9) {
    const Partition a({2, 2});
    const Partition b({3, 2, 1, 1, 1, 1});
    s.expect(contains(b, a) &&
                 contains(k_conjugate(b, 3), k_conjugate(a, 3)) &&
                 !leq(a, b, 3),
             [] {
               return std::string("two-sided containment wrongly implies "
                                  "comparability at k=3");
             });
  }
  for (int d = 0; d <= std::min(n, 7); ++d) {
    for (const Partition& lambda : k_bounded_partitions(d, k_val)) {
      const std::string id = tag(k_val, lambda);
      const auto chains = saturated_chains(lambda, k_val);
      s.expect(static_cast<long long>(chains.size()) ==
                   standard_count(lambda, k_val),
               [&] { return id + ": chain count differs from the path count"; });
      s.expect(static_cast<long long>(chains.size()) ==
                   oracle::chain_count_by_paths(lambda, k_val),
               [&] { return id + ": chain count differs from the search count"; });
      for (std::size_t t = 0; t + 1 < chains.size(); ++t) {
        s.expect(chains[t] < chains[t + 1],
                 [&] { return id + ": chains not strictly sorted"; });
      }
      for (const Chain& ch : chains) {
        bool good = ch.k == k_val && !ch.steps.empty() &&
                    ch.steps.front().empty() && ch.steps.back() == lambda;
        for (std::size_t t = 0; good && t + 1 < ch.steps.size(); ++t) {
          const auto ups = up_covers(ch.steps[t], k_val);
          good = std::find(ups.begin(), ups.end(), ch.steps[t + 1]) != ups.end();
        }
        s.expect(good, [&] { return id + ": saturated chain is not a cover path"; });
        s.expect(chain_evaluation(ch) ==
                     Composition(static_cast<std::size_t>(d), 1),
                 [&] { return id + ": saturated chain evaluation is not unit"; });
      }
    }
  }
}

void peel_check(Suite& s, const Core& big, const Core& small, int r, int k_val,
                const std::string& id) {
  Core cur = big;
  const std::set<Cell> target = cell_set(small.shape());
  std::set<int> used;
  int steps = 0;
  while (cur.shape() != small.shape() && steps <= k_val + 1) {
    s.expect(is_horizontal_strip(cur.shape(), small.shape()), [&] {
      return id + ": intermediate core skew is not a horizontal strip";
    });
    Cell rightmost{0, 0};
    for (Cell c : cells(cur.shape())) {
      if (!target.count(c) && c.col > rightmost.col) rightmost = c;
    }
    if (rightmost.col == 0) break;
    const int i = residue(rightmost, k_val);
    s.expect(used.insert(i).second, [&] {
      return id + ": residue " + std::to_string(i) + " peeled twice";
    });
    const Core next = apply_generator(cur, i);
    bool shrank = contains(cur.shape(), next.shape()) &&
                  next.shape() != cur.shape() &&
                  contains(next.shape(), small.shape());
    const auto kept = cell_set(next.shape());
    for (Cell c : cells(cur.shape())) {
      if (kept.count(c)) continue;
      if (residue(c, k_val) != i || target.count(c)) shrank = false;
    }
    s.expect(shrank, [&] {
      return id + ": peeling residue " + std::to_string(i) +
             " does not remove exactly its skew cells";
    });
    if (!shrank) break;
    cur = next;
    ++steps;
  }
  s.expect(cur.shape() == small.shape() && steps == r, [&] {
    return id + ": peeling does not reach the smaller core in " +
           std::to_string(r) + " residues";
  });
}

void check_admissible(int n, int k_val, Suite& s) {
  const auto P = partitions_up_to(std::min(n, 8), k_val);
  for (const Partition& a : P) {
    const Partition ac = k_conjugate(a, k_val);
    const Core ca = partition_to_core(a, k_val);
    for (const Partition& b : P) {
      if (!contains(b, a)) continue;
      const std::string id =
          tag(k_val, a) + " to " + partition_to_string(b);
      const int r = static_cast<int>(b.sum() - a.sum());
      const bool adm = r_admissible(b, a, r, k_val);
      const Partition bc = k_conjugate(b, k_val);
      const Core cb = partition_to_core(b, k_val);
      s.expect(adm == (is_horizontal_strip(b, a) &&
                       is_vertical_strip(bc, ac)),
               [&] { return id + ": admissibility differs from the strip pair"; });
      const bool core_horizontal = is_horizontal_strip(cb.shape(), ca.shape());
      if (adm) {
        s.expect(core_horizontal,
                 [&] { return id + ": admissible but core skew not horizontal"; });
        s.expect(leq(a, b, k_val),
                 [&] { return id + ": admissible pair not comparable"; });
        if (r >= 1) peel_check(s, cb, ca, r, k_val, id);
      }
      if (contains(bc, ac) && core_horizontal) {
        s.expect(adm, [&] {
          return id + ": nested with horizontal core skew but not admissible";
        });
      }
    }
  }
  for (int d = 0; d <= std::min(n, 6); ++d) {
    const auto alphas = compositions(d, k_val);
    for (const Partition& lambda : k_bounded_partitions(d, k_val)) {
      const std::string id = tag(k_val, lambda);
      for (const Composition& alpha : alphas) {
        const auto chains = admissible_chains(lambda, alpha, k_val);
        s.expect(chains.size() ==
                     oracle::tableaux_by_search(lambda, alpha, k_val).size(),
                 [&] {
                   return id + " eval " + composition_to_string(alpha) +
                          ": chain count differs from the filling search";
                 });
        for (std::size_t t = 0; t + 1 < chains.size(); ++t) {
          s.expect(chains[t] < chains[t + 1],
                   [&] { return id + ": admissible chains not sorted"; });
        }
        for (const Chain& ch : chains) {
          bool good = ch.k == k_val && !ch.steps.empty() &&
                      ch.steps.front().empty() && ch.steps.back() == lambda &&
                      ch.steps.size() == alpha.size() + 1;
          for (std::size_t t = 0; good && t + 1 < ch.steps.size(); ++t) {
            good = r_admissible(ch.steps[t + 1], ch.steps[t],
                                alpha[t], k_val);
          }
          s.expect(good && is_admissible_chain(ch) &&
                       chain_evaluation(ch) == alpha,
                   [&] {
                     return id + " eval " + composition_to_string(alpha) +
                            ": chain steps are not admissible pairs";
                   });
        }
      }
      s.expect(admissible_chains(lambda,
                                 Composition(static_cast<std::size_t>(d), 1),
                                 k_val) == saturated_chains(lambda, k_val),
               [&] { return id + ": unit chains differ from saturated chains"; });
    }
  }
}

void check_tableaux(int n, int k_val, Suite& s) {
  for (int d = 0; d <= std::min(n, 6); ++d) {
    const Composition ones(static_cast<std::size_t>(d), 1);
    for (const Partition& lambda : k_bounded_partitions(d, k_val)) {
      const std::string id = tag(k_val, lambda);
      const auto ts = enumerate_standard(lambda, k_val);
      s.expect(static_cast<long long>(ts.size()) ==
                   standard_count(lambda, k_val),
               [&] { return id + ": standard tableau count mismatch"; });
      s.expect(ts == oracle::tableaux_by_search(lambda, ones, k_val),
               [&] { return id + ": standard tableaux differ from the search"; });
      for (std::size_t t = 0; t + 1 < ts.size(); ++t) {
        s.expect(reading_word(ts[t]) < reading_word(ts[t + 1]),
                 [&] { return id + ": tableaux not sorted by reading word"; });
      }
      for (const KTableau& t : ts) {
        s.expect(is_valid_tableau(t) && is_standard(t),
                 [&] { return id + ": enumerated tableau invalid"; });
        const Chain ch = gamma_inv(t);
        s.expect(is_admissible_chain(ch) && gamma(ch) == t,
                 [&] { return id + ": chain round trip fails"; });
        s.expect(from_reduced_word(to_reduced_word(t), k_val) == t,
                 [&] { return id + ": word round trip fails"; });
      }
      const auto chains = saturated_chains(lambda, k_val);
      s.expect(chains.size() == ts.size(),
               [&] { return id + ": chains and tableaux differ in number"; });
      for (const Chain& ch : chains) {
        const KTableau t = gamma(ch);
        s.expect(is_valid_tableau(t) && is_standard(t) && gamma_inv(t) == ch,
                 [&] { return id + ": chain filling round trip fails"; });
      }
      if (!lambda.empty() && hook_length(lambda, Cell{1, 1}) <= k_val) {
        s.expect(standard_count(lambda, k_val) ==
                     oracle::hook_length_count(lambda),
                 [&] { return id + ": hook length formula disagrees"; });
      }
      for (const Partition& mu : all_partitions(d)) {
        const auto sst = enumerate_semistandard(lambda, mu.parts(), k_val);
        const std::string eid = id + " eval " + partition_to_string(mu);
        if (d <= 5) {
          s.expect(sst.size() ==
                       oracle::tableaux_by_search(lambda, mu.parts(), k_val)
                           .size(),
                   [&] { return eid + ": enumeration differs from the search"; });
        } else {
          s.expect(sst.size() ==
                       admissible_chains(lambda, mu.parts(), k_val).size(),
                   [&] { return eid + ": enumeration differs from the chains"; });
        }
        if (mu == lambda) {
          s.expect(sst.size() == 1,
                   [&] { return eid + ": self evaluation count is not one"; });
        }
        if (!dominates(lambda, mu)) {
          s.expect(sst.empty(),
                   [&] { return eid + ": nonzero below dominance"; });
        }
        for (const KTableau& t : sst) {
          s.expect(is_valid_tableau(t) && t.evaluation == mu.parts(),
                   [&] { return eid + ": enumerated tableau invalid"; });
          const Chain ch = gamma_inv(t);
          s.expect(is_admissible_chain(ch) && gamma(ch) == t &&
                       chain_evaluation(ch) == t.evaluation,
                   [&] { return eid + ": chain round trip fails"; });
          if (!t.evaluation.empty()) {
            Chain shorter = ch;
            shorter.steps.pop_back();
            s.expect(gamma_inv(delete_max_letter(t)) == shorter,
                     [&] { return eid + ": deletion is not chain truncation"; });
          }
          long long moves = 0;
          const KTableau st = standardize(t, &moves);
          s.expect(is_valid_tableau(st) && is_standard(st) &&
                       st.shape == t.shape && st.k == t.k &&
                       moves == static_cast<long long>(d),
                   [&] { return eid + ": standardization malformed"; });
          if (is_standard(t)) {
            s.expect(st == t,
                     [&] { return eid + ": standard input not fixed"; });
          }
        }
      }
    }
  }
  for (int d = 0; d <= std::min(n, 5); ++d) {
    for (const Partition& nu : all_partitions(d)) {
      const std::string id = tag(k_val, nu);
      const long long got = min_fill_count(nu, k_val);
      s.expect(got == oracle::min_fill_by_search(nu, k_val),
               [&] { return id + ": least filling size differs from search"; });
      if (!core_violation(nu, k_val).has_value()) {
        s.expect(got == core_to_partition(Core(nu, k_val)).sum(), [&] {
          return id + ": least filling of a core is not its bounded-hook count";
        });
      }
    }
  }
}

void check_affine(int n, int k_val, Suite& s) {
  const std::string kid = "k=" + std::to_string(k_val);
  std::map<AffinePermutation, int> depth;
  std::vector<AffinePermutation> frontier{AffinePermutation::identity(k_val)};
  depth.emplace(frontier.front(), 0);
  const int word_cap = std::min(n, k_val <= 3 ? 6 : 4);
  for (int dn = 1; dn <= word_cap; ++dn) {
    std::vector<AffinePermutation> next;
    for (const AffinePermutation& sp : frontier) {
      for (int i = 0; i <= k_val; ++i) {
        AffinePermutation t = apply_generator(sp, i, Side::right);
        if (depth.emplace(t, dn).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [perm, dist] : depth) {
    const std::string id = kid + " window " + [&] {
      std::string w;
      for (long long v : perm.window()) w += (w.empty() ? "" : ",") + std::to_string(v);
      return w;
    }();
    s.expect(length(perm) == dist,
             [&] { return id + ": inversion count differs from word distance"; });
    for (int i = 0; i <= k_val; ++i) {
      s.expect(apply_generator(apply_generator(perm, i, Side::right), i,
                               Side::right) == perm &&
                   apply_generator(apply_generator(perm, i, Side::left), i,
                                   Side::left) == perm,
               [&] {
                 return id + ": generator " + std::to_string(i) +
                        " is not an involution";
               });
    }
    if (dist <= 4) {
      s.expect(oracle::length_by_search(perm) == dist,
               [&] { return id + ": breadth-first length differs"; });
    }
    const auto words = reduced_words(perm);
    s.expect(!words.empty(),
             [&] { return id + ": no reduced words found"; });
    for (std::size_t t = 0; t + 1 < words.size(); ++t) {
      s.expect(words[t] < words[t + 1],
               [&] { return id + ": reduced words not sorted"; });
    }
    bool all_end_zero = true;
    for (const auto& w : words) {
      s.expect(static_cast<int>(w.size()) == dist &&
                   from_word(w, k_val) == perm,
               [&] { return id + ": reduced word does not evaluate back"; });
      AffinePermutation acc = AffinePermutation::identity(k_val);
      long long len = 0;
      bool additive = true;
      for (int letter : w) {
        acc = apply_generator(acc, letter, Side::right);
        ++len;
        additive = additive && length(acc) == len;
      }
      s.expect(additive,
               [&] { return id + ": length not additive along a reduced word"; });
      if (!w.empty() && w.back() != 0) all_end_zero = false;
    }
    const auto one = reduced_word(perm);
    s.expect(static_cast<int>(one.size()) == dist &&
                 from_word(one, k_val) == perm,
             [&] { return id + ": peeled word is not reduced"; });
    if (dist > 0) {
      s.expect(is_min_coset_rep(perm) == all_end_zero, [&] {
        return id + ": minimality differs from words ending in zero";
      });
    }
  }
  const int prefix_cap = (k_val <= 3) ? std::min(n, 8) : std::min(n, 5);
  std::vector<int> word;
  auto descend = [&](auto&& self, const Core& c, const AffinePermutation& p)
      -> void {
    std::vector<long long> win = p.window();
    std::sort(win.begin(), win.end());
    const AffinePermutation rep(win, k_val);
    const auto wid = [&] {
      std::string w = kid + " word";
      for (int letter : word) w += " " + std::to_string(letter);
      return w;
    };
    s.expect(is_min_coset_rep(rep),
             [&] { return wid() + ": sorted window is not minimal"; });
    s.expect(to_core(rep) == c,
             [&] { return wid() + ": window route core differs"; });
    s.expect(core_to_partition(c).sum() == length(rep),
             [&] { return wid() + ": core degree differs from length"; });
    if (word.size() <= 3) {
      s.expect(core_from_word(word, k_val) == c && from_word(word, k_val) == p,
               [&] { return wid() + ": incremental routes drift"; });
    }
    if (static_cast<int>(word.size()) >= prefix_cap) return;
    for (int i = 0; i <= k_val; ++i) {
      word.insert(word.begin(), i);
      self(self, apply_generator(c, i), apply_generator(p, i, Side::left));
      word.erase(word.begin());
    }
  };
  descend(descend, Core(Partition{}, k_val),
          AffinePermutation::identity(k_val));
  for (int d = 0; d <= n; ++d) {
    for (const Partition& lambda : k_bounded_partitions(d, k_val)) {
      const std::string id = tag(k_val, lambda);
      const AffinePermutation w = phi(lambda, k_val);
      s.expect(is_min_coset_rep(w) && length(w) == lambda.sum(),
               [&] { return id + ": image is not a minimal element of its length"; });
      s.expect(core_to_partition(to_core(w)) == lambda,
               [&] { return id + ": affine round trip fails"; });
      const auto cw = canonical_reduced_word(lambda, k_val);
      std::vector<int> expected;
      for (int r = lambda.length(); r >= 1; --r) {
        for (int c = lambda.part(r); c >= 1; --c) {
          expected.push_back(residue(Cell{r, c}, k_val));
        }
      }
      s.expect(cw == expected && from_word(cw, k_val) == w,
               [&] { return id + ": canonical word malformed"; });
    }
  }
  for (int d = 0; d <= std::min(n, 6); ++d) {
    for (const Partition& lambda : k_bounded_partitions(d, k_val)) {
      const std::string id = tag(k_val, lambda);
      const auto words = reduced_words(phi(lambda, k_val));
      s.expect(static_cast<long long>(words.size()) ==
                   standard_count(lambda, k_val),
               [&] { return id + ": reduced word count differs from tableaux"; });
      std::set<std::vector<int>> wset(words.begin(), words.end());
      std::set<std::vector<int>> tset;
      for (const KTableau& t : enumerate_standard(lambda, k_val)) {
        tset.insert(to_reduced_word(t));
      }
      s.expect(wset == tset,
               [&] { return id + ": tableau words differ from reduced words"; });
    }
  }
}

void check_weak_order(int n, int k_val, Suite& s) {
  for (int d = 0; d < n; ++d) {
    for (const Partition& lambda : k_bounded_partitions(d, k_val)) {
      const std::string id = tag(k_val, lambda);
      std::vector<AffinePermutation> images;
      for (const Partition& mu : up_covers(lambda, k_val)) {
        images.push_back(phi(mu, k_val));
      }
      std::sort(images.begin(), images.end());
      s.expect(images == weak_covers(phi(lambda, k_val)), [&] {
        return id + ": cover images differ from the weak order covers";
      });
    }
  }
}

void check_bruhat(int n, int k_val, Suite& s) {
  const auto P = partitions_up_to(std::min(n, 6), k_val);
  std::vector<AffinePermutation> reps;
  reps.reserve(P.size());
  for (const Partition& p : P) reps.push_back(phi(p, k_val));
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = 0; j < P.size(); ++j) {
      const bool got = bruhat_leq(reps[i], reps[j]);
      s.expect(got == oracle::bruhat_leq_by_subwords(reps[i], reps[j]), [&] {
        return tag(k_val, P[i]) + " vs " + partition_to_string(P[j]) +
               ": containment order differs from the subword test";
      });
      if (leq(P[i], P[j], k_val)) {
        s.expect(got, [&] {
          return tag(k_val, P[i]) + " vs " + partition_to_string(P[j]) +
                 ": comparable pair fails the containment order";
        });
      }
    }
  }
}

void check_kostka(int n, int k_val, Suite& s) {
  const std::string kid = "k=" + std::to_string(k_val);
  for (int d = 0; d <= std::min(n, 7); ++d) {
    const std::string id = kid + " n=" + std::to_string(d);
    const KostkaMatrix m = kostka_matrix(d, k_val);
    s.expect(m.n == d && m.k == k_val,
             [&] { return id + ": matrix labels wrong"; });
    auto shapes = k_bounded_partitions(d, k_val);
    std::sort(shapes.begin(), shapes.end(),
              [](const Partition& a, const Partition& b) { return b < a; });
    s.expect(m.index == shapes,
             [&] { return id + ": index is not the sorted bounded family"; });
    const std::size_t size = m.index.size();
    for (std::size_t i = 0; i + 1 < size; ++i) {
      s.expect(m.index[i + 1] < m.index[i],
               [&] { return id + ": index not strictly descending"; });
      for (std::size_t j = i + 1; j < size; ++j) {
        s.expect(!dominates(m.index[j], m.index[i]), [&] {
          return id + ": index order is incompatible with dominance";
        });
      }
    }
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        const BigInt& e = m.entries[i][j];
        s.expect(e >= 0, [&] { return id + ": negative entry"; });
        if (i == j) {
          s.expect(e == 1, [&] { return id + ": diagonal entry is not one"; });
        }
        if (e != 0) {
          s.expect(dominates(m.index[i], m.index[j]), [&] {
            return id + ": nonzero entry outside the dominance triangle";
          });
        }
        if (d <= std::min(n, 5)) {
          s.expect(e == BigInt(static_cast<long long>(
                       oracle::tableaux_by_search(m.index[i],
                                                  m.index[j].parts(), k_val)
                           .size())),
                   [&] {
                     return id + ": entry differs from the filling search at " +
                            partition_to_string(m.index[i]) + " / " +
                            partition_to_string(m.index[j]);
                   });
        }
      }
    }
    if (d > 0) {
      s.expect(m.index.back() == Partition(std::vector<int>(d, 1)),
               [&] { return id + ": last column is not the one-column shape"; });
      for (std::size_t i = 0; i < size; ++i) {
        s.expect(m.entries[i][size - 1] ==
                     BigInt(standard_count(m.index[i], k_val)),
                 [&] {
                   return id + ": unit column differs from standard counts";
                 });
      }
    }
    if (k_val >= d) {
      const KostkaMatrix cm = classical_kostka(d);
      s.expect(cm.index == m.index && cm.entries == m.entries, [&] {
        return id + ": large bound does not reduce to the classical matrix";
      });
    }
    const KostkaMatrix inv = k_schur_in_h(d, k_val);
    s.expect(inv.index == m.index,
             [&] { return id + ": inverse carries a different index"; });
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        BigInt left = 0;
        BigInt right = 0;
        for (std::size_t t = 0; t < size; ++t) {
          left += m.entries[i][t] * inv.entries[t][j];
          right += inv.entries[i][t] * m.entries[t][j];
        }
        const BigInt want = (i == j) ? 1 : 0;
        s.expect(left == want && right == want,
                 [&] { return id + ": inverse product is not the identity"; });
      }
    }
  }
  for (int d = 0; d <= std::min(n, 5); ++d) {
    const KostkaMatrix cm = classical_kostka(d);
    for (std::size_t i = 0; i < cm.index.size(); ++i) {
      for (std::size_t j = 0; j < cm.index.size(); ++j) {
        s.expect(cm.entries[i][j] ==
                     BigInt(oracle::ssyt_count_by_search(cm.index[i],
                                                         cm.index[j])),
                 [&] {
                   return kid + " n=" + std::to_string(d) +
                          ": classical entry differs from the filling search";
                 });
      }
    }
  }
  for (int d = 0; d <= std::min(n, 6); ++d) {
    const RearrangementReport rep = rearrangement_check(d, k_val);
    s.expect(rep.all_pass(), [&] {
      return kid + " n=" + std::to_string(d) +
             ": evaluation rearrangement failed: " +
             (rep.failures.empty() ? std::string("?") : rep.failures.front());
    });
  }
}

}  // namespace

std::vector<CheckResult> run_all_checks(int n, int k) {
  if (n < 0) throw std::invalid_argument("degree bound must be nonnegative");
  if (k < 1) throw std::invalid_argument("bound must be positive");
  std::vector<CheckResult> out;
  {
    Suite s("partition");
    try {
      check_partition(n, s);
    } catch (const std::exception& e) {
      ++s.result.checks;
      s.result.failures.push_back(std::string("suite aborted: ") + e.what());
    }
    out.push_back(std::move(s.result));
  }
  const auto run = [&](const char* name, auto&& fn) {
    Suite s(name);
    for (int k_val = 1; k_val <= k; ++k_val) {
      try {
        fn(n, k_val, s);
      } catch (const std::exception& e) {
        ++s.result.checks;
        s.result.failures.push_back("k=" + std::to_string(k_val) +
                                    ": suite aborted: " + e.what());
      }
    }
    out.push_back(std::move(s.result));
  };
  run("skew", check_skew);
  run("core-bijection", check_core_bijection);
  run("generators", check_generators);
  run("covers", check_covers);
  run("order", check_order);
  run("admissible", check_admissible);
  run("tableaux", check_tableaux);
  run("affine", check_affine);
  run("weak-order", check_weak_order);
  run("bruhat", check_bruhat);
  run("kostka", check_kostka);
  return out;
}

}  // namespace kcore
