#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lgrp/error.hpp"
#include "lgrp/group.hpp"
#include "lgrp/hom.hpp"
#include "lgrp/lattice.hpp"
#include "lgrp/lsubset.hpp"

namespace lgrp::json_io {

using json = nlohmann::ordered_json;

inline json parse(const std::string& text, const std::string& origin = "input") {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, origin + ": " + e.what());
  }
}

inline json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

namespace detail {

inline const json& field(const json& doc, const char* key, const char* what) {
  if (!doc.is_object() || !doc.contains(key))
    throw Error(ErrorKind::ParseError, std::string(what) + " document needs a \"" + key + "\" field");
  return doc.at(key);
}

inline std::vector<std::string> string_list(const json& node, const char* what) {
  if (!node.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace detail

/// {"chain": [bottom, ..., top]} or {"elements": [...], "le": [[a, b], ...]}
/// where each pair declares a <= b (the order is closed transitively).
inline FiniteLattice lattice_from_json(const json& doc) {
  if (doc.is_object() && doc.contains("chain")) return FiniteLattice::chain(detail::string_list(doc.at("chain"), "chain"));
  auto elements = detail::string_list(detail::field(doc, "elements", "lattice"), "elements");
  std::vector<FiniteLattice::ElementPair> pairs;
  const json& le = detail::field(doc, "le", "lattice");
  if (!le.is_array()) throw Error(ErrorKind::ParseError, "\"le\" must be an array of pairs");
  for (const auto& pair : le) {
    const auto names = detail::string_list(pair, "order pair");
    if (names.size() != 2) throw Error(ErrorKind::ParseError, "order pairs must have two entries");
    pairs.emplace_back(names[0], names[1]);
  }
  return FiniteLattice::validate(std::move(elements), pairs);
}

inline json lattice_to_json(const FiniteLattice& l) {
  json le = json::array();
  for (const auto& [a, b] : l.covering_pairs_by_name()) le.push_back({a, b});
  return {{"elements", l.names()}, {"le", std::move(le)}};
}

/// {"builtin": "D8"} or {"elements": [...], "table": [[...], ...]}
inline FiniteGroup group_from_json(const json& doc) {
  if (doc.is_object() && doc.contains("builtin")) {
    if (!doc.at("builtin").is_string()) throw Error(ErrorKind::ParseError, "\"builtin\" must be a string");
    return builtin_group(doc.at("builtin").get<std::string>());
  }
  auto elements = detail::string_list(detail::field(doc, "elements", "group"), "elements");
  const json& rows = detail::field(doc, "table", "group");
  if (!rows.is_array()) throw Error(ErrorKind::ParseError, "\"table\" must be an array of rows");
  std::vector<std::vector<std::string>> table;
  for (const auto& row : rows) table.push_back(detail::string_list(row, "table row"));
  return FiniteGroup::validate(std::move(elements), table);
}

inline json group_to_json(const FiniteGroup& g) {
  json table = json::array();
  for (Element x = 0; x < g.order(); ++x) {
    json row = json::array();
    for (Element y = 0; y < g.order(); ++y) row.push_back(g.name(g.mul(x, y)));
    table.push_back(std::move(row));
  }
  return {{"elements", g.names()}, {"table", std::move(table)}};
}

/// {"values": {element: lattice element, ...}}; every group element must
/// appear exactly once.
inline LSubset lsubset_from_json(const json& doc, const GroupPtr& group, const LatticePtr& lattice) {
  const json& values = detail::field(doc, "values", "L-subset");
  if (!values.is_object()) throw Error(ErrorKind::ParseError, "\"values\" must be an object");
  std::vector<Value> out(group->order(), lattice->bottom());
  std::vector<bool> seen(group->order(), false);
  for (const auto& [key, val] : values.items()) {
    const auto x = group->find(key);
    if (!x) throw Error(ErrorKind::CrossValidation, "'" + key + "' is not a group element");
    if (!val.is_string()) throw Error(ErrorKind::ParseError, "value of '" + key + "' must be a string");
    const auto v = lattice->find(val.get<std::string>());
    if (!v) throw Error(ErrorKind::CrossValidation, "'" + val.get<std::string>() + "' is not a lattice element");
    out[*x] = *v;
    seen[*x] = true;
  }
  for (Element x = 0; x < group->order(); ++x)
    if (!seen[x]) throw Error(ErrorKind::CrossValidation, "no value given for '" + group->name(x) + "'");
  return LSubset(group, lattice, std::move(out));
}

inline json values_to_json(const LSubset& mu) {
  json values = json::object();
  for (Element x = 0; x < mu.size(); ++x) values[mu.group().name(x)] = mu.lattice().name(mu(x));
  return values;
}

inline json lsubset_to_json(const LSubset& mu) { return {{"values", values_to_json(mu)}}; }

/// {"map": {source element: target element}}. A partial map is treated as
/// an assignment on generators and extended.
inline GroupHom hom_from_json(const json& doc, const GroupPtr& source, const GroupPtr& target) {
  const json& map = detail::field(doc, "map", "homomorphism");
  if (!map.is_object()) throw Error(ErrorKind::ParseError, "\"map\" must be an object");
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& [key, val] : map.items()) {
    const auto x = source->find(key);
    if (!x) throw Error(ErrorKind::CrossValidation, "'" + key + "' is not a source element");
    if (!val.is_string()) throw Error(ErrorKind::ParseError, "image of '" + key + "' must be a string");
    const auto y = target->find(val.get<std::string>());
    if (!y) throw Error(ErrorKind::CrossValidation, "'" + val.get<std::string>() + "' is not a target element");
    pairs.emplace_back(*x, *y);
  }
  if (pairs.size() == source->order()) {
    std::vector<Element> full(source->order());
    for (auto [x, y] : pairs) full[x] = y;
    return GroupHom::validate(source, target, std::move(full));
  }
  return GroupHom::from_generators(source, target, pairs);
}

inline json hom_to_json(const GroupHom& f) {
  json map = json::object();
  for (Element x = 0; x < f.source().order(); ++x) map[f.source().name(x)] = f.target().name(f(x));
  return {{"map", std::move(map)}};
}

inline json element_set_to_json(const FiniteGroup& g, ElementSet s) { return g.names_of(s); }

}  // namespace lgrp::json_io
