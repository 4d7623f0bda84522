#include "kcore/ktableau.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kcore {

namespace {

std::string cell_str(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

int letter_at(const KTableau& t, Cell c) {
  return t.rows[static_cast<std::size_t>(c.row) - 1]
               [static_cast<std::size_t>(c.col) - 1];
}

}  // namespace

std::optional<std::string> tableau_violation(const KTableau& t) {
  if (t.k < 1) return "k must be at least 1";
  if (core_violation(t.shape, t.k)) return "shape is not a valid core";
  if (t.rows.size() != static_cast<std::size_t>(t.shape.length())) {
    return "row count does not match the shape";
  }
  for (int r = 1; r <= t.shape.length(); ++r) {
    if (t.rows[static_cast<std::size_t>(r) - 1].size() !=
        static_cast<std::size_t>(t.shape.part(r))) {
      return "row " + std::to_string(r) + " does not match the shape";
    }
  }
  const int letters = static_cast<int>(t.evaluation.size());
  long long weight = 0;
  for (int part : t.evaluation) {
    if (part < 1) return "evaluation parts must be positive";
    weight += part;
  }
  const Core shape_core(t.shape, t.k);
  if (weight != core_to_partition(shape_core).sum()) {
    return "evaluation weight does not match the k-bounded hook count";
  }
  for (int r = 1; r <= t.shape.length(); ++r) {
    for (int c = 1; c <= t.shape.part(r); ++c) {
      const int a = letter_at(t, {r, c});
      if (a < 1 || a > letters) {
        return "letter out of range at cell " + cell_str({r, c});
      }
      if (c > 1 && letter_at(t, {r, c - 1}) > a) {
        return "row decreases at cell " + cell_str({r, c});
      }
      if (r > 1 && t.shape.part(r - 1) >= c &&
          letter_at(t, {r - 1, c}) >= a) {
        return "column does not increase at cell " + cell_str({r, c});
      }
    }
  }
  std::map<int, std::set<int>> residues_of_letter;
  for (int r = 1; r <= t.shape.length(); ++r) {
    for (int c = 1; c <= t.shape.part(r); ++c) {
      residues_of_letter[letter_at(t, {r, c})].insert(residue({r, c}, t.k));
    }
  }
  for (int a = 1; a <= letters; ++a) {
    const auto it = residues_of_letter.find(a);
    const int found = it == residues_of_letter.end()
                          ? 0
                          : static_cast<int>(it->second.size());
    if (found != t.evaluation[static_cast<std::size_t>(a) - 1]) {
      return "letter " + std::to_string(a) + " occupies " +
             std::to_string(found) + " residues instead of " +
             std::to_string(t.evaluation[static_cast<std::size_t>(a) - 1]);
    }
  }
  return std::nullopt;
}

bool is_valid_tableau(const KTableau& t) { return !tableau_violation(t); }

bool is_standard(const KTableau& t) {
  if (!is_valid_tableau(t)) return false;
  return std::all_of(t.evaluation.begin(), t.evaluation.end(),
                     [](int part) { return part == 1; });
}

std::vector<int> reading_word(const KTableau& t) {
  std::vector<int> word;
  for (const auto& row : t.rows) word.insert(word.end(), row.begin(), row.end());
  return word;
}

KTableau gamma(const Chain& chain) {
  if (!is_admissible_chain(chain)) {
    throw std::invalid_argument("not an admissible chain");
  }
  const int k = chain.k;
  std::vector<Partition> cores;
  cores.reserve(chain.steps.size());
  for (const Partition& step : chain.steps) {
    cores.push_back(partition_to_core(step, k).shape());
  }
  const Partition& shape = cores.back();
  KTableau t{k, shape, {}, chain_evaluation(chain)};
  t.rows.resize(static_cast<std::size_t>(shape.length()));
  for (int r = 1; r <= shape.length(); ++r) {
    t.rows[static_cast<std::size_t>(r) - 1].assign(
        static_cast<std::size_t>(shape.part(r)), 0);
  }
  for (std::size_t j = 1; j < cores.size(); ++j) {
    for (int r = 1; r <= cores[j].length(); ++r) {
      for (int c = cores[j - 1].part(r) + 1; c <= cores[j].part(r); ++c) {
        t.rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] =
            static_cast<int>(j);
      }
    }
  }
  if (auto why = tableau_violation(t)) {
    throw std::logic_error("chain image is not a tableau: " + *why);
  }
  return t;
}

Chain gamma_inv(const KTableau& t) {
  if (auto why = tableau_violation(t)) {
    throw std::invalid_argument("invalid tableau: " + *why);
  }
  Chain chain{t.k, {}};
  const int letters = static_cast<int>(t.evaluation.size());
  for (int j = 0; j <= letters; ++j) {
    std::vector<int> parts;
    for (int r = 1; r <= t.shape.length(); ++r) {
      int len = 0;
      while (len < t.shape.part(r) && letter_at(t, {r, len + 1}) <= j) len++;
      parts.push_back(len);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    chain.steps.push_back(
        core_to_partition(Core(Partition(std::move(parts)), t.k)));
  }
  if (!is_admissible_chain(chain)) {
    throw std::logic_error("tableau image is not an admissible chain");
  }
  return chain;
}

namespace {

std::vector<KTableau> tableaux_from_chains(const std::vector<Chain>& chains) {
  std::vector<KTableau> out;
  out.reserve(chains.size());
  for (const Chain& chain : chains) out.push_back(gamma(chain));
  std::sort(out.begin(), out.end(), [](const KTableau& a, const KTableau& b) {
    return reading_word(a) < reading_word(b);
  });
  return out;
}

}  // namespace

std::vector<KTableau> enumerate_standard(const Partition& lambda, int k,
                                         std::size_t limit) {
  return tableaux_from_chains(saturated_chains(lambda, k, limit));
}

std::vector<KTableau> enumerate_semistandard(const Partition& lambda,
                                             const Composition& alpha, int k,
                                             std::size_t limit) {
  return tableaux_from_chains(admissible_chains(lambda, alpha, k, limit));
}

KTableau delete_max_letter(const KTableau& t) {
  if (auto why = tableau_violation(t)) {
    throw std::invalid_argument("invalid tableau: " + *why);
  }
  if (t.evaluation.empty()) {
    throw std::invalid_argument("cannot delete from the empty tableau");
  }
  const int max_letter = static_cast<int>(t.evaluation.size());
  KTableau out{t.k, Partition(), {}, t.evaluation};
  out.evaluation.pop_back();
  std::vector<int> parts;
  for (int r = 1; r <= t.shape.length(); ++r) {
    std::vector<int> row;
    for (int c = 1; c <= t.shape.part(r); ++c) {
      const int a = letter_at(t, {r, c});
      if (a < max_letter) row.push_back(a);
    }
    if (row.empty()) break;
    parts.push_back(static_cast<int>(row.size()));
    out.rows.push_back(std::move(row));
  }
  out.shape = Partition(std::move(parts));
  if (auto why = tableau_violation(out)) {
    throw std::logic_error("deletion result is not a tableau: " + *why);
  }
  return out;
}

KTableau standardize(const KTableau& t, long long* step_count) {
  if (auto why = tableau_violation(t)) {
    throw std::invalid_argument("invalid tableau: " + *why);
  }
  long long weight = 0;
  for (int part : t.evaluation) weight += part;

  KTableau out = t;
  std::vector<std::vector<bool>> done(out.rows.size());
  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    done[r].assign(out.rows[r].size(), false);
  }
  long long steps = 0;
  for (long long m = weight; m >= 1; --m) {
    int a = 0;
    for (int r = 1; r <= out.shape.length(); ++r) {
      for (int c = 1; c <= out.shape.part(r); ++c) {
        if (!done[static_cast<std::size_t>(r) - 1]
                 [static_cast<std::size_t>(c) - 1]) {
          a = std::max(a, letter_at(out, {r, c}));
        }
      }
    }
    if (a == 0) throw std::logic_error("ran out of letters while relabeling");
    Cell rightmost{0, 0};
    for (int r = 1; r <= out.shape.length(); ++r) {
      for (int c = 1; c <= out.shape.part(r); ++c) {
        if (done[static_cast<std::size_t>(r) - 1]
                [static_cast<std::size_t>(c) - 1]) {
          continue;
        }
        if (letter_at(out, {r, c}) == a && c > rightmost.col) {
          rightmost = {r, c};
        }
      }
    }
    const int res = residue(rightmost, out.k);
    for (int r = 1; r <= out.shape.length(); ++r) {
      for (int c = 1; c <= out.shape.part(r); ++c) {
        if (done[static_cast<std::size_t>(r) - 1]
                [static_cast<std::size_t>(c) - 1]) {
          continue;
        }
        if (letter_at(out, {r, c}) == a && residue({r, c}, out.k) == res) {
          out.rows[static_cast<std::size_t>(r) - 1]
                  [static_cast<std::size_t>(c) - 1] = static_cast<int>(m);
          done[static_cast<std::size_t>(r) - 1]
              [static_cast<std::size_t>(c) - 1] = true;
        }
      }
    }
    steps++;
  }
  out.evaluation.assign(static_cast<std::size_t>(weight), 1);
  if (auto why = tableau_violation(out)) {
    throw std::logic_error("standardization broke the tableau: " + *why);
  }
  if (step_count) *step_count = steps;
  return out;
}

long long min_fill_count(const Partition& nu, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  for (int m = 0; m <= 10000; ++m) {
    for (const Partition& lambda : k_bounded_partitions(m, k)) {
      if (contains(partition_to_core(lambda, k).shape(), nu)) return m;
    }
  }
  throw std::logic_error("no core found containing the shape");
}

std::vector<int> to_reduced_word(const KTableau& t) {
  if (!is_standard(t)) {
    throw std::invalid_argument("tableau is not standard");
  }
  const int letters = static_cast<int>(t.evaluation.size());
  std::vector<int> res_of(static_cast<std::size_t>(letters) + 1, -1);
  for (int r = 1; r <= t.shape.length(); ++r) {
    for (int c = 1; c <= t.shape.part(r); ++c) {
      res_of[static_cast<std::size_t>(letter_at(t, {r, c}))] =
          residue({r, c}, t.k);
    }
  }
  std::vector<int> word;
  for (int a = letters; a >= 1; --a) {
    word.push_back(res_of[static_cast<std::size_t>(a)]);
  }
  return word;
}

KTableau from_reduced_word(const std::vector<int>& word, int k) {
  Core cur(Partition(), k);
  std::vector<Partition> cores{cur.shape()};
  for (std::size_t j = word.size(); j-- > 0;) {
    if (word[j] < 0 || word[j] > k) {
      throw std::invalid_argument("letter out of range");
    }
    Core next = apply_generator(cur, word[j]);
    if (next.shape().sum() <= cur.shape().sum()) {
      throw std::invalid_argument("word step does not grow the core");
    }
    cores.push_back(next.shape());
    cur = std::move(next);
  }
  const Partition& shape = cores.back();
  KTableau t{k, shape, {},
             Composition(word.size(), 1)};
  t.rows.resize(static_cast<std::size_t>(shape.length()));
  for (int r = 1; r <= shape.length(); ++r) {
    t.rows[static_cast<std::size_t>(r) - 1].assign(
        static_cast<std::size_t>(shape.part(r)), 0);
  }
  for (std::size_t j = 1; j < cores.size(); ++j) {
    for (int r = 1; r <= cores[j].length(); ++r) {
      for (int c = cores[j - 1].part(r) + 1; c <= cores[j].part(r); ++c) {
        t.rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] =
            static_cast<int>(j);
      }
    }
  }
  if (auto why = tableau_violation(t)) {
    throw std::logic_error("word image is not a tableau: " + *why);
  }
  return t;
}

}  // namespace kcore
