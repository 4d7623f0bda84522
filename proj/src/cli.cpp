#include "kcore/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <initializer_list>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kcore/affine.hpp"
#include "kcore/checks.hpp"
#include "kcore/core.hpp"
#include "kcore/io.hpp"
#include "kcore/kostka.hpp"
#include "kcore/ktableau.hpp"
#include "kcore/lattice.hpp"
#include "kcore/partition.hpp"

namespace kcore {

namespace {

constexpr const char* usage_text =
    "usage: kcore <subcommand> [options]\n"
    "\n"
    "subcommands:\n"
    "  core-to-partition -k K SHAPE      bounded partition of a core\n"
    "  partition-to-core -k K PARTITION  core of a bounded partition\n"
    "  kskew -k K PARTITION              skew diagram of a bounded partition\n"
    "  kconjugate -k K PARTITION         conjugate through the core\n"
    "  covers -k K PARTITION --direction up|down\n"
    "  leq -k K A B                      order comparison\n"
    "  chains -k K PARTITION [--evaluation A,B,...]\n"
    "  tableaux -k K PARTITION --standard | --evaluation A,B,...\n"
    "  standardize                       tableau JSON on stdin\n"
    "  word                              tableau JSON on stdin, prints its word\n"
    "  tableau -k K [LETTERS...]         tableau of a reduced word\n"
    "  phi -k K PARTITION                window image of a partition\n"
    "  kostka --n N -k K                 tableau counting matrix\n"
    "  kschur-h --n N -k K               inverse of the counting matrix\n"
    "  hasse --n N -k K                  cover graph up to degree N\n"
    "  check --n N -k K                  run the consistency suites\n"
    "\n"
    "Partitions are comma-separated parts, '-' for the empty partition.\n"
    "--format selects text (default), json, csv (matrices) or dot (hasse).\n"
    "KCORE_MAX_ENUM caps enumeration sizes (default 1000000).\n";

const char* const known_commands[] = {
    "core-to-partition", "partition-to-core", "kskew",  "kconjugate",
    "covers",            "leq",               "chains", "tableaux",
    "standardize",       "word",              "tableau", "phi",
    "kostka",            "kschur-h",          "hasse",  "check",
};

std::size_t enumeration_limit() {
  const char* raw = std::getenv("KCORE_MAX_ENUM");
  if (raw == nullptr) return 1000000;
  const std::string text(raw);
  const bool digits =
      !text.empty() && text.size() <= 18 &&
      std::all_of(text.begin(), text.end(),
                  [](unsigned char ch) { return std::isdigit(ch) != 0; });
  if (!digits || std::stoll(text) < 1) {
    throw std::invalid_argument("KCORE_MAX_ENUM must be a positive integer");
  }
  return static_cast<std::size_t>(std::stoll(text));
}

void require_format(const std::string& format,
                    std::initializer_list<const char*> allowed,
                    const std::string& cmd) {
  for (const char* name : allowed) {
    if (format == name) return;
  }
  throw std::invalid_argument("format " + format + " is not supported for " +
                              cmd);
}

Partition bounded_partition(const std::string& text, int k) {
  const Partition p = parse_partition(text);
  if (!is_k_bounded(p, k)) {
    throw std::invalid_argument("partition " + partition_to_string(p) +
                                " is not " + std::to_string(k) + "-bounded");
  }
  return p;
}

Composition positive_evaluation(const std::string& text, long long degree) {
  const Composition alpha = parse_composition(text);
  long long total = 0;
  for (int part : alpha) {
    if (part < 1) {
      throw std::invalid_argument("evaluation parts must be positive");
    }
    total += part;
  }
  if (total != degree) {
    throw std::invalid_argument("evaluation does not sum to the degree");
  }
  return alpha;
}

std::string word_to_text(const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

KTableau read_tableau(std::istream& in) {
  nlohmann::json j;
  in >> j;
  return j.get<KTableau>();
}

void print_tableau(const KTableau& t, const std::string& format,
                   std::ostream& out) {
  if (format == "json") {
    out << nlohmann::json(t).dump() << '\n';
  } else {
    out << tableau_to_text(t) << '\n';
  }
}

int dispatch(const std::string& cmd, const std::vector<std::string>& rest,
             std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"", "kcore " + cmd};
  int k = 1;
  int n = 0;
  std::string format = "text";
  std::string first;
  std::string second;
  std::string direction;
  std::string evaluation;
  bool standard = false;
  std::vector<int> letters;

  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  const bool reads_stdin = cmd == "standardize" || cmd == "word";
  if (!reads_stdin) {
    app.add_option("-k,--k", k, "hook bound")
        ->required()
        ->check(CLI::Range(1, 1000000));
  }
  if (cmd == "kostka" || cmd == "kschur-h" || cmd == "hasse" ||
      cmd == "check") {
    app.add_option("--n", n, "degree bound")
        ->required()
        ->check(CLI::Range(0, 1000000));
  } else if (cmd == "leq") {
    app.add_option("a", first, "smaller candidate")->required();
    app.add_option("b", second, "larger candidate")->required();
  } else if (cmd == "tableau") {
    app.add_option("letters", letters, "reduced word letters");
  } else if (!reads_stdin) {
    app.add_option("partition", first, "partition argument")->required();
  }
  if (cmd == "covers") {
    app.add_option("--direction", direction, "cover direction")
        ->required()
        ->check(CLI::IsMember({"up", "down"}));
  }
  if (cmd == "chains" || cmd == "tableaux") {
    app.add_option("--evaluation", evaluation, "evaluation composition");
  }
  if (cmd == "tableaux") {
    app.add_flag("--standard", standard, "unit evaluation");
  }

  try {
    std::vector<std::string> reversed(rest.rbegin(), rest.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  if (cmd == "core-to-partition") {
    require_format(format, {"text", "json"}, cmd);
    const Core core(parse_partition(first), k);
    const Partition lambda = core_to_partition(core);
    if (format == "json") {
      out << nlohmann::json(lambda).dump() << '\n';
    } else {
      out << partition_to_string(lambda) << '\n';
    }
    return 0;
  }
  if (cmd == "partition-to-core") {
    require_format(format, {"text", "json"}, cmd);
    const Core core = partition_to_core(bounded_partition(first, k), k);
    if (format == "json") {
      out << nlohmann::json(core).dump() << '\n';
    } else {
      out << partition_to_string(core.shape()) << '\n';
    }
    return 0;
  }
  if (cmd == "kskew") {
    require_format(format, {"text", "json"}, cmd);
    const KSkew ks = k_skew(bounded_partition(first, k), k);
    if (format == "json") {
      out << nlohmann::json(ks).dump() << '\n';
    } else {
      out << kskew_to_text(ks) << '\n';
    }
    return 0;
  }
  if (cmd == "kconjugate") {
    require_format(format, {"text", "json"}, cmd);
    const Partition w = k_conjugate(bounded_partition(first, k), k);
    if (format == "json") {
      out << nlohmann::json(w).dump() << '\n';
    } else {
      out << partition_to_string(w) << '\n';
    }
    return 0;
  }
  if (cmd == "covers") {
    require_format(format, {"text", "json"}, cmd);
    const Partition lambda = bounded_partition(first, k);
    const auto list =
        direction == "up" ? up_covers(lambda, k) : down_covers(lambda, k);
    for (const Partition& p : list) {
      if (format == "json") {
        out << nlohmann::json(p).dump() << '\n';
      } else {
        out << partition_to_string(p) << '\n';
      }
    }
    err << "count: " << list.size() << '\n';
    return 0;
  }
  if (cmd == "leq") {
    require_format(format, {"text", "json"}, cmd);
    const bool result =
        leq(bounded_partition(first, k), bounded_partition(second, k), k);
    if (format == "json") {
      out << nlohmann::json(result).dump() << '\n';
    } else {
      out << (result ? "true" : "false") << '\n';
    }
    return 0;
  }
  if (cmd == "chains") {
    require_format(format, {"text", "json"}, cmd);
    const Partition lambda = bounded_partition(first, k);
    const std::size_t limit = enumeration_limit();
    const auto list =
        evaluation.empty()
            ? saturated_chains(lambda, k, limit)
            : admissible_chains(
                  lambda, positive_evaluation(evaluation, lambda.sum()), k,
                  limit);
    for (const Chain& ch : list) {
      if (format == "json") {
        out << nlohmann::json(ch).dump() << '\n';
      } else {
        out << chain_to_text(ch) << '\n';
      }
    }
    err << "count: " << list.size() << '\n';
    return 0;
  }
  if (cmd == "tableaux") {
    require_format(format, {"text", "json"}, cmd);
    if (standard == !evaluation.empty()) {
      throw std::invalid_argument(
          "exactly one of --standard and --evaluation is required");
    }
    const Partition lambda = bounded_partition(first, k);
    const std::size_t limit = enumeration_limit();
    const auto list =
        standard
            ? enumerate_standard(lambda, k, limit)
            : enumerate_semistandard(
                  lambda, positive_evaluation(evaluation, lambda.sum()), k,
                  limit);
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (format == "json") {
        out << nlohmann::json(list[i]).dump() << '\n';
      } else {
        if (i > 0) out << '\n';
        out << tableau_to_text(list[i]) << '\n';
      }
    }
    err << "count: " << list.size() << '\n';
    return 0;
  }
  if (cmd == "standardize") {
    require_format(format, {"text", "json"}, cmd);
    long long steps = 0;
    const KTableau result = standardize(read_tableau(in), &steps);
    print_tableau(result, format, out);
    err << "steps: " << steps << '\n';
    return 0;
  }
  if (cmd == "word") {
    require_format(format, {"text", "json"}, cmd);
    const std::vector<int> word = to_reduced_word(read_tableau(in));
    if (format == "json") {
      out << nlohmann::json(word).dump() << '\n';
    } else {
      out << word_to_text(word) << '\n';
    }
    return 0;
  }
  if (cmd == "tableau") {
    require_format(format, {"text", "json"}, cmd);
    print_tableau(from_reduced_word(letters, k), format, out);
    return 0;
  }
  if (cmd == "phi") {
    require_format(format, {"text", "json"}, cmd);
    const Partition lambda = bounded_partition(first, k);
    if (format == "json") {
      out << nlohmann::json(phi(lambda, k)).dump() << '\n';
    } else {
      out << word_to_text(canonical_reduced_word(lambda, k)) << '\n';
    }
    return 0;
  }
  if (cmd == "kostka" || cmd == "kschur-h") {
    require_format(format, {"text", "json", "csv"}, cmd);
    const KostkaMatrix m =
        cmd == "kostka" ? kostka_matrix(n, k) : k_schur_in_h(n, k);
    if (format == "json") {
      out << nlohmann::json(m).dump() << '\n';
    } else if (format == "csv") {
      out << kostka_to_csv(m);
    } else {
      out << kostka_to_text(m);
    }
    return 0;
  }
  if (cmd == "hasse") {
    require_format(format, {"text", "dot"}, cmd);
    if (format == "dot") {
      out << hasse_dot(n, k);
      return 0;
    }
    long long edges = 0;
    for (int d = 0; d < n; ++d) {
      for (const Partition& lambda : k_bounded_partitions(d, k)) {
        for (const Partition& mu : up_covers(lambda, k)) {
          out << partition_to_string(lambda) << " -> "
              << partition_to_string(mu) << '\n';
          ++edges;
        }
      }
    }
    err << "count: " << edges << '\n';
    return 0;
  }
  require_format(format, {"text"}, cmd);
  const auto results = run_all_checks(n, k);
  bool all_ok = true;
  long long total = 0;
  for (const CheckResult& r : results) {
    total += r.checks;
    if (r.ok()) {
      out << "ok " << r.suite << " (" << r.checks << " checks)\n";
    } else {
      all_ok = false;
      out << "FAIL " << r.suite << " (" << r.checks << " checks, "
          << r.failures.size() << " failures)\n";
      for (const std::string& f : r.failures) {
        out << "  " << f << '\n';
      }
    }
  }
  out << (all_ok ? "all suites passed" : "suite failures detected") << " ("
      << total << " checks)\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << "missing subcommand\n" << usage_text;
    return 64;
  }
  const std::string& cmd = args.front();
  if (cmd == "-h" || cmd == "--help" || cmd == "help") {
    out << usage_text;
    return 0;
  }
  const bool recognized =
      std::find(std::begin(known_commands), std::end(known_commands), cmd) !=
      std::end(known_commands);
  if (!recognized) {
    err << "unknown subcommand: " << cmd << '\n' << usage_text;
    return 64;
  }
  try {
    return dispatch(cmd, {args.begin() + 1, args.end()}, in, out, err);
  } catch (const EnumerationLimit& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return 2;
  }
}

}  // namespace kcore
