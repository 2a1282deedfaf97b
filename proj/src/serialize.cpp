#include "fastmcs/serialize.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace fastmcs {

namespace {

using json = nlohmann::json;

json set_to_labels(const Topology& t, const ElementSet& s) {
  json arr = json::array();
  s.for_each([&](std::uint32_t id) { arr.push_back(t.element_label(id)); });
  return arr;
}

}  // namespace

std::string family_to_json(const Topology& t, const SetFamily& family) {
  json arr = json::array();
  for (const auto& s : family.canonical()) arr.push_back(set_to_labels(t, s));
  return arr.dump();
}

SetFamily family_from_json(const Topology& t, std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid family JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("family JSON must be an array of arrays");
  SetFamily family;
  for (const auto& arr : j) {
    if (!arr.is_array()) throw ParseError("family JSON must be an array of arrays");
    ElementSet s;
    for (const auto& label : arr) {
      if (!label.is_string()) throw ParseError("element labels must be strings");
      const auto idx = t.node_index(label.get<std::string>());
      if (!idx) {
        throw ParseError("unknown node label \"" + label.get<std::string>() + "\"");
      }
      s.insert(t.node_element(*idx));
    }
    family.push_back(std::move(s));
  }
  return family;
}

std::string family_to_table(const Topology& t, const SetFamily& family) {
  std::ostringstream os;
  for (const auto& s : family.canonical()) {
    bool first = true;
    s.for_each([&](std::uint32_t id) {
      if (!first) os << ' ';
      first = false;
      os << t.element_label(id);
    });
    os << '\n';
  }
  return os.str();
}

std::string family_json_to_table(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid family JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("family JSON must be an array of arrays");
  std::ostringstream os;
  for (const auto& arr : j) {
    if (!arr.is_array()) throw ParseError("family JSON must be an array of arrays");
    bool first = true;
    for (const auto& label : arr) {
      if (!label.is_string()) throw ParseError("element labels must be strings");
      if (!first) os << ' ';
      first = false;
      os << label.get<std::string>();
    }
    os << '\n';
  }
  return os.str();
}

std::string paths_to_json(const Topology& t,
                          const std::vector<std::vector<std::uint32_t>>& paths) {
  json arr = json::array();
  for (const auto& path : paths) {
    json p = json::array();
    for (std::uint32_t node : path) p.push_back(t.label(node));
    arr.push_back(std::move(p));
  }
  return arr.dump();
}

std::string paths_to_table(const Topology& t,
                           const std::vector<std::vector<std::uint32_t>>& paths) {
  std::ostringstream os;
  for (const auto& path : paths) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) os << " - ";
      os << t.label(path[i]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace fastmcs
