#include "kcore/io.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace kcore {

namespace {

std::vector<int> parse_int_list(const std::string& text,
                                const char* what) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string token = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty() || token.size() > 9 ||
        token.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument(std::string("malformed ") + what +
                                  " string: '" + text + "'");
    }
    values.push_back(std::stoi(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

}  // namespace

Partition parse_partition(const std::string& text) {
  if (text == "-") return Partition();
  try {
    return Partition(parse_int_list(text, "partition"));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed partition string: '" + text + "'");
  }
}

Composition parse_composition(const std::string& text) {
  if (text == "-") return Composition();
  const Composition values = parse_int_list(text, "composition");
  for (int v : values) {
    if (v < 1) {
      throw std::invalid_argument("composition parts must be positive: '" +
                                  text + "'");
    }
  }
  return values;
}

std::string partition_to_string(const Partition& p) {
  return composition_to_string(p.parts());
}

std::string composition_to_string(const Composition& a) {
  if (a.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

void from_json(const nlohmann::json& j, Partition& p) {
  p = Partition(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const Core& c) {
  j = nlohmann::json{{"k", c.k()}, {"shape", c.shape()}};
}

Core core_from_json(const nlohmann::json& j) {
  return Core(j.at("shape").get<Partition>(), j.at("k").get<int>());
}

void to_json(nlohmann::json& j, const KSkew& s) {
  j = nlohmann::json{
      {"k", s.k}, {"outer", s.skew.outer}, {"inner", s.skew.inner}};
}

KSkew kskew_from_json(const nlohmann::json& j) {
  return KSkew(SkewShape(j.at("outer").get<Partition>(),
                         j.at("inner").get<Partition>()),
               j.at("k").get<int>());
}

void to_json(nlohmann::json& j, const Chain& c) {
  j = nlohmann::json{{"k", c.k}, {"steps", c.steps}};
}

void from_json(const nlohmann::json& j, Chain& c) {
  c.k = j.at("k").get<int>();
  c.steps = j.at("steps").get<std::vector<Partition>>();
}

void to_json(nlohmann::json& j, const KTableau& t) {
  j = nlohmann::json{{"k", t.k},
                     {"shape", t.shape},
                     {"rows", t.rows},
                     {"evaluation", t.evaluation}};
}

void from_json(const nlohmann::json& j, KTableau& t) {
  t.k = j.at("k").get<int>();
  t.shape = j.at("shape").get<Partition>();
  t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
  t.evaluation = j.at("evaluation").get<Composition>();
}

void to_json(nlohmann::json& j, const AffinePermutation& s) {
  j = nlohmann::json{{"k", s.k()}, {"window", s.window()}};
}

AffinePermutation affine_from_json(const nlohmann::json& j) {
  return AffinePermutation(j.at("window").get<std::vector<long long>>(),
                           j.at("k").get<int>());
}

namespace {

long long entry_to_int64(const BigInt& value) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (value < lo || value > hi) {
    throw std::invalid_argument("matrix entry does not fit in 64 bits");
  }
  return static_cast<long long>(value);
}

}  // namespace

void to_json(nlohmann::json& j, const KostkaMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& row : m.entries) {
    nlohmann::json out_row = nlohmann::json::array();
    for (const BigInt& value : row) out_row.push_back(entry_to_int64(value));
    entries.push_back(std::move(out_row));
  }
  j = nlohmann::json{
      {"n", m.n}, {"k", m.k}, {"index", m.index}, {"entries", entries}};
}

std::string chain_to_text(const Chain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    if (i > 0) out += " < ";
    out += partition_to_string(c.steps[i]);
  }
  return out;
}

std::string tableau_to_text(const KTableau& t) {
  if (t.rows.empty()) return "-";
  std::string out;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) {
    std::string line;
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (i > 0) line += ' ';
      line += std::to_string((*it)[i]);
    }
    out += line;
    if (std::next(it) != t.rows.rend()) out += '\n';
  }
  return out;
}

std::string kskew_to_text(const KSkew& s) {
  return partition_to_string(s.skew.outer) + " / " +
         partition_to_string(s.skew.inner);
}

std::string kostka_to_text(const KostkaMatrix& m) {
  const std::size_t size = m.index.size();
  std::vector<std::string> labels(size);
  std::vector<std::vector<std::string>> cells(size,
                                              std::vector<std::string>(size));
  std::size_t label_width = 0;
  std::vector<std::size_t> col_width(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    labels[i] = partition_to_string(m.index[i]);
    label_width = std::max(label_width, labels[i].size());
    col_width[i] = std::max(col_width[i], labels[i].size());
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      cells[i][j] = m.entries[i][j].str();
      col_width[j] = std::max(col_width[j], cells[i][j].size());
    }
  }
  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (std::size_t j = 0; j < size; ++j) {
    out << "  " << std::string(col_width[j] - labels[j].size(), ' ')
        << labels[j];
  }
  out << '\n';
  for (std::size_t i = 0; i < size; ++i) {
    out << std::string(label_width - labels[i].size(), ' ') << labels[i];
    for (std::size_t j = 0; j < size; ++j) {
      out << "  " << std::string(col_width[j] - cells[i][j].size(), ' ')
          << cells[i][j];
    }
    out << '\n';
  }
  return out.str();
}

std::string kostka_to_csv(const KostkaMatrix& m) {
  std::string out;
  for (const Partition& p : m.index) {
    out += ",\"" + partition_to_string(p) + '"';
  }
  out += '\n';
  for (std::size_t i = 0; i < m.index.size(); ++i) {
    out += '"' + partition_to_string(m.index[i]) + '"';
    for (const BigInt& value : m.entries[i]) {
      out += ',' + value.str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace kcore
