#pragma once

#include <string>

#include "json.hpp"

#include "kcore/affine.hpp"
#include "kcore/core.hpp"
#include "kcore/kostka.hpp"
#include "kcore/ktableau.hpp"
#include "kcore/lattice.hpp"
#include "kcore/partition.hpp"

namespace kcore {

// Comma-separated parts, "-" for the empty partition. Throws
// std::invalid_argument on anything else.
Partition parse_partition(const std::string& text);
Composition parse_composition(const std::string& text);

std::string partition_to_string(const Partition& p);
std::string composition_to_string(const Composition& a);

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

void to_json(nlohmann::json& j, const Core& c);
Core core_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const KSkew& s);
KSkew kskew_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const Chain& c);
void from_json(const nlohmann::json& j, Chain& c);

void to_json(nlohmann::json& j, const KTableau& t);
void from_json(const nlohmann::json& j, KTableau& t);

void to_json(nlohmann::json& j, const AffinePermutation& s);
AffinePermutation affine_from_json(const nlohmann::json& j);

// Entries are emitted as 64-bit integers; overflowing entries are an error.
void to_json(nlohmann::json& j, const KostkaMatrix& m);

// Partitions joined by " < ", e.g. "- < 1 < 2 < 2,1".
std::string chain_to_text(const Chain& c);

// One line per row, top row first, letters space-separated; "-" when empty.
std::string tableau_to_text(const KTableau& t);

// "outer / inner" with "-" for an empty inner shape.
std::string kskew_to_text(const KSkew& s);

// Column-aligned table with partition labels on both axes.
std::string kostka_to_text(const KostkaMatrix& m);

// First header cell empty; partition labels quoted; entries bare numbers.
std::string kostka_to_csv(const KostkaMatrix& m);

}  // namespace kcore
