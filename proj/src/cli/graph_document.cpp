#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "gomega/error.hpp"
#include "gomega/io.hpp"

namespace gomega {

using nlohmann::json;

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw Error("cannot format double");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text, const std::string& field) {
  double x = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, x);
  if (ec != std::errc() || ptr != end || text.empty())
    throw FormatError(field, "'" + std::string(text) + "' is not a decimal number");
  return x;
}

json convention_metadata() {
  return {{"loop_degree", 1},
          {"upsilon_middle_exception", false},
          {"word_order", "leftmost-acts-last"},
          {"vertex_order", "lexicographic, first letter most significant"}};
}

namespace {

json weight_to_json(Weight w) {
  if (w.imag() == 0.0 && !std::signbit(w.imag())) return format_double(w.real());
  return json::array({format_double(w.real()), format_double(w.imag())});
}

Weight weight_from_json(const json& j, const std::string& field) {
  if (j.is_string()) return {parse_double(j.get<std::string>(), field), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
    return {parse_double(j[0].get<std::string>(), field + "/0"),
            parse_double(j[1].get<std::string>(), field + "/1")};
  throw FormatError(field, "weight must be a decimal string or a [re, im] pair of strings");
}

const json& require(const json& obj, const char* key, const std::string& pointer) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(pointer + "/" + key, "missing field");
  return *it;
}

std::size_t line_of(std::string_view bytes, std::size_t offset) {
  offset = std::min(offset, bytes.size());
  return 1 + static_cast<std::size_t>(std::count(bytes.begin(), bytes.begin() + offset, '\n'));
}

json parse_json(std::string_view bytes) {
  try {
    return json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw FormatError("line " + std::to_string(line_of(bytes, e.byte == 0 ? 0 : e.byte - 1)),
                      e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

json graph_to_json(const WeightedGraph& g, const json& metadata) {
  json vertices = json::array();
  for (const auto& n : g.names()) vertices.push_back(n);
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    json je{{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"wu", weight_to_json(e.wu)}};
    if (!e.is_loop()) je["wv"] = weight_to_json(e.wv);
    if (!e.label.empty()) je["label"] = e.label;
    edges.push_back(std::move(je));
  }
  json meta = convention_metadata();
  if (!metadata.is_null()) meta.update(metadata);
  return {{"format_version", kFormatVersion},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)},
          {"metadata", std::move(meta)}};
}

GraphDocument graph_from_json(const json& doc, const std::string& pointer) {
  if (!doc.is_object()) throw FormatError(pointer.empty() ? "/" : pointer, "expected an object");
  const json& version = require(doc, "format_version", pointer);
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    throw FormatError(pointer + "/format_version",
                      "unsupported format version (expected " +
                          std::to_string(kFormatVersion) + ")");

  const json& vertices = require(doc, "vertices", pointer);
  if (!vertices.is_array()) throw FormatError(pointer + "/vertices", "expected an array");
  std::vector<std::string> names;
  std::unordered_map<std::string, Vertex> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string field = pointer + "/vertices/" + std::to_string(i);
    if (!vertices[i].is_string()) throw FormatError(field, "vertex id must be a string");
    const auto name = vertices[i].get<std::string>();
    if (!index.emplace(name, static_cast<Vertex>(i)).second)
      throw FormatError(field, "duplicate vertex id '" + name + "'");
    names.push_back(name);
  }

  GraphDocument out;
  const std::size_t vertex_count = names.size();
  out.graph = WeightedGraph(vertex_count, std::move(names));
  const json& edges = require(doc, "edges", pointer);
  if (!edges.is_array()) throw FormatError(pointer + "/edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string field = pointer + "/edges/" + std::to_string(i);
    const json& e = edges[i];
    if (!e.is_object()) throw FormatError(field, "expected an object");
    const auto endpoint = [&](const char* key) {
      const json& id = require(e, key, field);
      if (!id.is_string()) throw FormatError(field + "/" + key, "vertex id must be a string");
      const auto it = index.find(id.get<std::string>());
      if (it == index.end())
        throw FormatError(field + "/" + key, "unknown vertex id '" + id.get<std::string>() + "'");
      return it->second;
    };
    const Vertex u = endpoint("u");
    const Vertex v = endpoint("v");
    const Weight wu = weight_from_json(require(e, "wu", field), field + "/wu");
    std::string label;
    if (const auto it = e.find("label"); it != e.end()) {
      if (!it->is_string()) throw FormatError(field + "/label", "label must be a string");
      label = it->get<std::string>();
    }
    if (u == v) {
      if (e.contains("wv")) throw FormatError(field + "/wv", "a loop carries a single weight");
      out.graph.add_loop(u, wu, std::move(label));
    } else {
      const Weight wv = weight_from_json(require(e, "wv", field), field + "/wv");
      out.graph.add_edge(u, v, wu, wv, std::move(label));
    }
  }
  if (const auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) throw FormatError(pointer + "/metadata", "expected an object");
    out.metadata = *it;
  }
  return out;
}

std::string serialize_graph(const WeightedGraph& g, const json& metadata) {
  return dump(graph_to_json(g, metadata));
}

std::string serialize_graph(const GraphDocument& doc) {
  return serialize_graph(doc.graph, doc.metadata);
}

GraphDocument parse_graph(std::string_view bytes) { return graph_from_json(parse_json(bytes)); }

std::string serialize_covering(const CoveringMap& c) {
  json vmap = json::array(), emap = json::array();
  for (Vertex v = 0; v < c.vertex_map.size(); ++v)
    vmap.push_back({c.source->name(v), c.target->name(c.vertex_map[v])});
  for (EdgeId e = 0; e < c.edge_map.size(); ++e) emap.push_back({e, c.edge_map[e]});
  json doc{{"format_version", kFormatVersion},
           {"source", graph_to_json(*c.source)},
           {"target", graph_to_json(*c.target)},
           {"vertex_map", std::move(vmap)},
           {"edge_map", std::move(emap)}};
  if (c.window)
    doc["window"] = {{"root", c.source->name(c.window->root)}, {"radius", c.window->radius}};
  return dump(doc);
}

CoveringMap parse_covering(std::string_view bytes) {
  const json doc = parse_json(bytes);
  if (!doc.is_object()) throw FormatError("/", "expected an object");
  const json& version = require(doc, "format_version", "");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    throw FormatError("/format_version", "unsupported format version");
  auto src = std::make_shared<WeightedGraph>(graph_from_json(require(doc, "source", ""), "/source").graph);
  auto dst = std::make_shared<WeightedGraph>(graph_from_json(require(doc, "target", ""), "/target").graph);

  CoveringMap c;
  c.vertex_map.assign(src->vertex_count(), 0);
  c.edge_map.assign(src->edge_count(), 0);
  std::vector<char> vseen(src->vertex_count(), 0), eseen(src->edge_count(), 0);

  const json& vmap = require(doc, "vertex_map", "");
  if (!vmap.is_array()) throw FormatError("/vertex_map", "expected an array");
  for (std::size_t i = 0; i < vmap.size(); ++i) {
    const std::string field = "/vertex_map/" + std::to_string(i);
    const json& p = vmap[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw FormatError(field, "expected a pair of vertex ids");
    const auto a = src->find(p[0].get<std::string>());
    const auto b = dst->find(p[1].get<std::string>());
    if (!a) throw FormatError(field + "/0", "unknown source vertex");
    if (!b) throw FormatError(field + "/1", "unknown target vertex");
    if (vseen[*a]) throw FormatError(field + "/0", "source vertex mapped twice");
    vseen[*a] = 1;
    c.vertex_map[*a] = *b;
  }
  const json& emap = require(doc, "edge_map", "");
  if (!emap.is_array()) throw FormatError("/edge_map", "expected an array");
  for (std::size_t i = 0; i < emap.size(); ++i) {
    const std::string field = "/edge_map/" + std::to_string(i);
    const json& p = emap[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
      throw FormatError(field, "expected a pair of edge indices");
    const auto a = p[0].get<std::size_t>(), b = p[1].get<std::size_t>();
    if (a >= src->edge_count()) throw FormatError(field + "/0", "unknown source edge");
    if (b >= dst->edge_count()) throw FormatError(field + "/1", "unknown target edge");
    if (eseen[a]) throw FormatError(field + "/0", "source edge mapped twice");
    eseen[a] = 1;
    c.edge_map[a] = static_cast<EdgeId>(b);
  }
  if (const auto it = std::ranges::find(vseen, 0); it != vseen.end())
    throw FormatError("/vertex_map", "source vertex '" +
                                         src->name(static_cast<Vertex>(it - vseen.begin())) +
                                         "' is not mapped");
  if (const auto it = std::ranges::find(eseen, 0); it != eseen.end())
    throw FormatError("/edge_map",
                      "source edge " + std::to_string(it - eseen.begin()) + " is not mapped");

  if (const auto it = doc.find("window"); it != doc.end()) {
    const json& w = *it;
    if (!w.is_object()) throw FormatError("/window", "expected an object");
    const json& root = require(w, "root", "/window");
    const json& radius = require(w, "radius", "/window");
    if (!root.is_string()) throw FormatError("/window/root", "expected a vertex id");
    if (!radius.is_number_integer() || radius.get<int>() < 0)
      throw FormatError("/window/radius", "expected a non-negative integer");
    const auto r = src->find(root.get<std::string>());
    if (!r) throw FormatError("/window/root", "unknown source vertex");
    c.window = CoveringWindow{*r, radius.get<int>(), bfs_distances(*src, *r)};
  }
  c.source = std::move(src);
  c.target = std::move(dst);
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace gomega
