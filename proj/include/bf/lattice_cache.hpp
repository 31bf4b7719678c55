#pragma once

// On-disk persistence of truncated ideal lattices.
//
// One versioned JSON file per (ideal, box, format version):
//   {format_version, spec, box, monomial_index, hnf_matrix, transform, columns, discarded}
// Integers are decimal strings. A file that fails to parse, carries another
// version, describes a different key, or whose basis does not re-derive from
// its transform is rebuilt, never trusted.

#include <optional>
#include <string>

#include <json.hpp>

#include "bf/ideal.hpp"

namespace bf {

std::string cache_file_name(const IdealSpec& spec, const Box& box);

nlohmann::json lattice_to_json(const LatticeBasis& lb);
// Parses and validates; returns nullopt with a reason on any defect.
std::optional<LatticeBasis> lattice_from_json(const nlohmann::json& j, const IdealSpec& spec, const Box& box,
                                              std::string* why = nullptr);

void cache_store(const std::string& dir, const LatticeBasis& lb, const WarningSink& warn);
std::optional<LatticeBasis> cache_load(const std::string& dir, const IdealSpec& spec, const Box& box,
                                       const WarningSink& warn);

}  // namespace bf
