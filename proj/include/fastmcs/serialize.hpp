#ifndef FASTMCS_SERIALIZE_HPP
#define FASTMCS_SERIALIZE_HPP

#include <string>
#include <vector>

#include "fastmcs/set_family.hpp"
#include "fastmcs/topology.hpp"

namespace fastmcs {

/// JSON array of arrays of element labels, canonical family order.
std::string family_to_json(const Topology& t, const SetFamily& family);

/// Inverse of family_to_json for node universes; throws ParseError on
/// malformed JSON or labels that are not nodes of t.
SetFamily family_from_json(const Topology& t, std::string_view json_text);

/// One line per set, labels space-separated, canonical order.
std::string family_to_table(const Topology& t, const SetFamily& family);

/// Re-renders a family JSON (array of arrays of labels) as table lines,
/// preserving the given order. Throws ParseError on malformed input.
std::string family_json_to_table(std::string_view json_text);

/// JSON array of label arrays, one per path.
std::string paths_to_json(const Topology& t,
                          const std::vector<std::vector<std::uint32_t>>& paths);

/// One "S - A - T" line per path.
std::string paths_to_table(const Topology& t,
                           const std::vector<std::vector<std::uint32_t>>& paths);

}  // namespace fastmcs

#endif  // FASTMCS_SERIALIZE_HPP
