// Parsers and serializers for the on-disk formats.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "nestoh/building_set.hpp"
#include "nestoh/graphs.hpp"
#include "nestoh/posets.hpp"

namespace nestoh {

// {"n": 4, "sets": [[1],[2],[1,2],...]} with 1-indexed elements.
BuildingSet building_set_from_json(const std::string& text);
std::string to_json(const BuildingSet& b);

// [{"n":3,"covers":[[1,2],[3,2]]}, ...]; covers are [lower, upper].
std::vector<Poset> posets_from_json(const std::string& text);
std::string to_json(std::span<const Poset> posets);

// Header "n <N>" followed by "i j" edge lines; blank lines are ignored.
Graph graph_from_text(const std::string& text);

std::string read_file(const std::string& path);  // throws parse_error

}  // namespace nestoh
