#include "kcore/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kcore {

bool is_admissible_chain(const Chain& chain) {
  if (chain.k < 1) return false;
  if (chain.steps.empty() || !chain.steps.front().empty()) return false;
  for (std::size_t i = 1; i < chain.steps.size(); ++i) {
    const Partition& prev = chain.steps[i - 1];
    const Partition& next = chain.steps[i];
    const long long r = next.sum() - prev.sum();
    if (r < 1) return false;
    if (!is_k_bounded(next, chain.k)) return false;
    if (!r_admissible(next, prev, static_cast<int>(r), chain.k)) return false;
  }
  return true;
}

Composition chain_evaluation(const Chain& chain) {
  Composition alpha;
  for (std::size_t i = 1; i < chain.steps.size(); ++i) {
    alpha.push_back(
        static_cast<int>(chain.steps[i].sum() - chain.steps[i - 1].sum()));
  }
  return alpha;
}

std::vector<std::pair<Cell, int>> k_addable_corners(const Partition& lambda,
                                                    int k) {
  const Core core = partition_to_core(lambda, k);
  std::vector<std::pair<Cell, int>> out;
  for (Cell corner : addable_corners(lambda)) {
    const Cell core_corner{corner.row, core.shape().part(corner.row) + 1};
    const int i = residue(core_corner, k);
    const auto highest = addable_corners_of_residue(core, i);
    if (highest.empty() || highest.front() != core_corner) continue;
    std::vector<int> parts = lambda.parts();
    if (corner.row > lambda.length()) parts.push_back(0);
    parts[static_cast<std::size_t>(corner.row) - 1]++;
    if (!is_k_bounded(Partition(parts), k)) continue;
    out.emplace_back(corner, i);
  }
  return out;
}

std::vector<Partition> up_covers(const Partition& lambda, int k) {
  std::vector<Partition> out;
  for (const auto& corner : k_addable_corners(lambda, k)) {
    std::vector<int> parts = lambda.parts();
    if (corner.first.row > lambda.length()) parts.push_back(0);
    parts[static_cast<std::size_t>(corner.first.row) - 1]++;
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Partition> down_covers(const Partition& lambda, int k) {
  const Core core = partition_to_core(lambda, k);
  std::vector<Partition> out;
  for (Cell corner : removable_corners(lambda)) {
    const Cell core_corner{corner.row, core.shape().part(corner.row)};
    const int i = residue(core_corner, k);
    const auto highest = removable_corners_of_residue(core, i);
    if (highest.empty() || highest.front() != core_corner) continue;
    std::vector<int> parts = lambda.parts();
    parts[static_cast<std::size_t>(corner.row) - 1]--;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    out.emplace_back(std::move(parts));
  }
  return out;
}

namespace {

bool leq_search(const Partition& from, const Partition& to,
                const Partition& to_conj, int k,
                std::map<Partition, bool>& memo) {
  if (from == to) return true;
  if (auto it = memo.find(from); it != memo.end()) return it->second;
  bool found = false;
  for (const Partition& next : up_covers(from, k)) {
    if (!contains(to, next)) continue;
    if (!contains(to_conj, k_conjugate(next, k))) continue;
    if (leq_search(next, to, to_conj, k, memo)) {
      found = true;
      break;
    }
  }
  memo[from] = found;
  return found;
}

}  // namespace

bool leq(const Partition& a, const Partition& b, int k) {
  if (!is_k_bounded(a, k) || !is_k_bounded(b, k)) {
    throw std::invalid_argument("partition is not k-bounded");
  }
  if (a == b) return true;
  if (a.sum() >= b.sum()) return false;
  if (!contains(b, a)) return false;
  const Partition b_conj = k_conjugate(b, k);
  if (!contains(b_conj, k_conjugate(a, k))) return false;
  std::map<Partition, bool> memo;
  return leq_search(a, b, b_conj, k, memo);
}

namespace {

void chain_search(const Partition& at, const Partition& target,
                  const Partition& target_conj, int k, std::size_t limit,
                  std::map<Partition, bool>& reach, std::vector<Partition>& acc,
                  std::vector<Chain>& out) {
  if (at == target) {
    if (out.size() >= limit) {
      throw EnumerationLimit("chain enumeration exceeded limit");
    }
    out.push_back(Chain{k, acc});
    return;
  }
  std::vector<Partition> next = up_covers(at, k);
  std::sort(next.begin(), next.end());
  for (const Partition& mu : next) {
    if (!contains(target, mu)) continue;
    if (!contains(target_conj, k_conjugate(mu, k))) continue;
    bool ok;
    if (auto it = reach.find(mu); it != reach.end()) {
      ok = it->second;
    } else {
      ok = leq(mu, target, k);
      reach[mu] = ok;
    }
    if (!ok) continue;
    acc.push_back(mu);
    chain_search(mu, target, target_conj, k, limit, reach, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Chain> saturated_chains(const Partition& lambda, int k,
                                    std::size_t limit) {
  if (!is_k_bounded(lambda, k)) {
    throw std::invalid_argument("partition is not k-bounded");
  }
  std::vector<Chain> out;
  std::map<Partition, bool> reach;
  std::vector<Partition> acc{Partition()};
  chain_search(Partition(), lambda, k_conjugate(lambda, k), k, limit, reach,
               acc, out);
  return out;
}

bool r_admissible(const Partition& larger, const Partition& smaller, int r,
                  int k) {
  if (!is_k_bounded(larger, k) || !is_k_bounded(smaller, k)) {
    throw std::invalid_argument("partition is not k-bounded");
  }
  if (r < 0) throw std::invalid_argument("strip size must be nonnegative");
  if (larger.sum() - smaller.sum() != r) return false;
  if (!is_horizontal_strip(larger, smaller)) return false;
  return is_vertical_strip(k_conjugate(larger, k), k_conjugate(smaller, k));
}

namespace {

void admissible_search(const Partition& at, const Partition& target,
                       const Partition& target_conj, const Composition& alpha,
                       std::size_t step, int k, std::size_t limit,
                       std::vector<Partition>& acc, std::vector<Chain>& out) {
  if (step == alpha.size()) {
    if (out.size() >= limit) {
      throw EnumerationLimit("chain enumeration exceeded limit");
    }
    out.push_back(Chain{k, acc});
    return;
  }
  const Partition at_conj = k_conjugate(at, k);
  for (const Partition& mu : add_horizontal_strips(at, alpha[step])) {
    if (!is_k_bounded(mu, k)) continue;
    if (!contains(target, mu)) continue;
    const Partition mu_conj = k_conjugate(mu, k);
    if (!is_vertical_strip(mu_conj, at_conj)) continue;
    if (!contains(target_conj, mu_conj)) continue;
    acc.push_back(mu);
    admissible_search(mu, target, target_conj, alpha, step + 1, k, limit, acc,
                      out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Chain> admissible_chains(const Partition& lambda,
                                     const Composition& alpha, int k,
                                     std::size_t limit) {
  if (!is_k_bounded(lambda, k)) {
    throw std::invalid_argument("partition is not k-bounded");
  }
  long long total = 0;
  for (int part : alpha) {
    if (part < 1) throw std::invalid_argument("composition parts must be positive");
    total += part;
  }
  if (total != lambda.sum()) {
    throw std::invalid_argument("composition weight must match the partition");
  }
  std::vector<Chain> out;
  std::vector<Partition> acc{Partition()};
  admissible_search(Partition(), lambda, k_conjugate(lambda, k), alpha, 0, k,
                    limit, acc, out);
  return out;
}

namespace {

std::string dot_id(const Partition& p) {
  std::string id = "p";
  for (int i = 1; i <= p.length(); ++i) {
    if (i > 1) id += "_";
    id += std::to_string(p.part(i));
  }
  return id;
}

std::string dot_label(const Partition& p) {
  if (p.empty()) return "∅";
  std::string label;
  for (int i = 1; i <= p.length(); ++i) {
    if (i > 1) label += ",";
    label += std::to_string(p.part(i));
  }
  return label;
}

}  // namespace

std::string hasse_dot(int n_max, int k) {
  if (n_max < 0) throw std::invalid_argument("degree bound must be nonnegative");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::ostringstream os;
  os << "digraph kyoung {\n  rankdir=BT;\n";
  std::vector<Partition> nodes;
  for (int n = 0; n <= n_max; ++n) {
    for (const Partition& p : k_bounded_partitions(n, k)) nodes.push_back(p);
  }
  for (const Partition& p : nodes) {
    os << "  " << dot_id(p) << " [label=\"" << dot_label(p) << "\"];\n";
  }
  for (const Partition& p : nodes) {
    if (p.sum() >= n_max) continue;
    for (const Partition& q : up_covers(p, k)) {
      os << "  " << dot_id(p) << " -> " << dot_id(q) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace kcore
