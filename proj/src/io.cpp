#include "egs/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace egs {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string string_field(const json& j, const char* key, const std::string& where) {
  const auto& v = field(j, key, where);
  if (!v.is_string()) throw FormatError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

RingElement expression(const json& v, const RingDescriptor& ring, const std::string& where) {
  if (v.is_number_integer()) return RingElement::constant(ring, mpq_class(mpz_class(v.dump())));
  if (!v.is_string()) throw FormatError(where + ": expected an expression string");
  try {
    return parse_element(v.get<std::string>(), ring);
  } catch (const ParseError& e) {
    throw FormatError(where + ": " + e.what());
  } catch (const RingError& e) {
    throw FormatError(where + ": " + e.what());
  }
}

Components components(const json& list, const LabeledGraph& g, const std::string& where) {
  if (!list.is_array()) throw FormatError(where + ": expected an array of components");
  if (list.size() != g.num_vertices())
    throw DimensionError(where + ": has " + std::to_string(list.size()) + " components, instance has " +
                         std::to_string(g.num_vertices()) + " vertices");
  Components out;
  for (std::size_t v = 0; v < list.size(); ++v)
    out.push_back(expression(list[v], g.ring(), where + " component " + std::to_string(v + 1)));
  return out;
}

}  // namespace

RingDescriptor parse_ring(const json& j) {
  const std::string kind = string_field(j, "kind", "ring");
  if (kind == "integers") return RingDescriptor::integers();
  if (kind != "polynomial") throw FormatError("ring: unknown kind \"" + kind + "\"");
  const auto& vars = field(j, "variables", "ring");
  if (!vars.is_array()) throw FormatError("ring: \"variables\" must be an array");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw FormatError("ring: variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  const std::string base = j.contains("base") ? string_field(j, "base", "ring") : "integers";
  BaseRing b;
  if (base == "integers") b = BaseRing::integers;
  else if (base == "rationals") b = BaseRing::rationals;
  else throw FormatError("ring: unknown base \"" + base + "\"");
  try {
    return RingDescriptor::polynomial(std::move(names), b);
  } catch (const RingError& e) {
    throw FormatError(std::string("ring: ") + e.what());
  }
}

json ring_to_json(const RingDescriptor& ring) {
  if (ring.is_integers()) return {{"kind", "integers"}};
  json vars = json::array();
  for (const auto& v : ring.variables()) vars.push_back(v);
  return {{"kind", "polynomial"},
          {"variables", vars},
          {"base", ring.base() == BaseRing::integers ? "integers" : "rationals"}};
}

LabeledGraph parse_instance(const json& j) {
  const RingDescriptor ring = parse_ring(field(j, "ring", "instance"));
  const auto& vs = field(j, "vertices", "instance");
  if (!vs.is_array()) throw FormatError("instance: \"vertices\" must be an array");
  std::vector<std::string> problems;
  std::vector<Vertex> vertices;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertex " + std::to_string(i + 1);
    std::string name = string_field(vs[i], "name", where);
    RingElement label = expression(field(vs[i], "label", where), ring, where + " label");
    if (!index.emplace(name, i).second) problems.push_back(where + ": duplicate name \"" + name + "\"");
    vertices.push_back({std::move(name), std::move(label)});
  }
  std::vector<Edge> edges;
  const json empty = json::array();
  const auto& es = j.contains("edges") ? j.at("edges") : empty;
  if (!es.is_array()) throw FormatError("instance: \"edges\" must be an array");
  for (std::size_t e = 0; e < es.size(); ++e) {
    const std::string where = "edge " + std::to_string(e + 1);
    const std::string u = string_field(es[e], "u", where), v = string_field(es[e], "v", where);
    RingElement label = expression(field(es[e], "label", where), ring, where + " label");
    auto iu = index.find(u), iv = index.find(v);
    if (iu == index.end() || iv == index.end()) {
      problems.push_back(where + ": unknown endpoint \"" + (iu == index.end() ? u : v) + "\"");
      continue;
    }
    edges.push_back({iu->second, iv->second, std::move(label)});
  }
  LabeledGraph g(ring, std::move(vertices), std::move(edges));
  for (auto& p : g.validate()) problems.push_back(std::move(p));
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return g;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

LabeledGraph parse_instance_text(std::string_view text) {
  try {
    return parse_instance(json::parse(text));
  } catch (const json::parse_error& e) {
    throw FormatError(e.what());
  }
}

LabeledGraph load_instance(const std::filesystem::path& path) { return parse_instance(read_json_file(path)); }

json instance_to_json(const LabeledGraph& g) {
  json vs = json::array(), es = json::array();
  for (const auto& v : g.vertices()) vs.push_back({{"name", v.name}, {"label", format_element(v.label)}});
  for (const auto& e : g.edges())
    es.push_back({{"u", g.vertices()[e.u].name}, {"v", g.vertices()[e.v].name}, {"label", format_element(e.label)}});
  return {{"ring", ring_to_json(g.ring())}, {"vertices", vs}, {"edges", es}};
}

SplineMatrix parse_spline_set(const json& j, const LabeledGraph& g) {
  const auto& list = field(j, "splines", "spline set");
  if (!list.is_array()) throw FormatError("spline set: \"splines\" must be an array");
  std::vector<Components> cols;
  for (std::size_t k = 0; k < list.size(); ++k) cols.push_back(components(list[k], g, "spline " + std::to_string(k + 1)));
  return SplineMatrix(std::move(cols));
}

SplineMatrix load_spline_set(const std::filesystem::path& path, const LabeledGraph& g) {
  return parse_spline_set(read_json_file(path), g);
}

Components parse_target(const json& j, const LabeledGraph& g) {
  if (j.is_object() && j.contains("spline")) return components(j.at("spline"), g, "target");
  auto set = parse_spline_set(j, g);
  if (set.size() != 1) throw DimensionError("target file must hold exactly one spline");
  return set.column(0);
}

Components load_target(const std::filesystem::path& path, const LabeledGraph& g) {
  return parse_target(read_json_file(path), g);
}

json components_to_json(std::span<const RingElement> f) {
  json out = json::array();
  for (const auto& x : f) out.push_back(format_element(x));
  return out;
}

json spline_set_to_json(const std::vector<Components>& splines) {
  json list = json::array();
  for (const auto& s : splines) list.push_back(components_to_json(s));
  return {{"splines", list}};
}

}  // namespace egs
