#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gomega/covering.hpp"
#include "gomega/graph.hpp"
#include "gomega/spectra.hpp"

namespace gomega {

inline constexpr int kFormatVersion = 1;

/// Shortest decimal string that reads back as the same double.
std::string format_double(double x);
/// Throws FormatError(field, ...) unless the whole string is a number.
double parse_double(std::string_view text, const std::string& field);

/// Conventions embedded in every artifact.
nlohmann::json convention_metadata();

struct GraphDocument {
  int format_version = kFormatVersion;
  WeightedGraph graph;
  nlohmann::json metadata = nlohmann::json::object();
};

nlohmann::json graph_to_json(const WeightedGraph& g,
                             const nlohmann::json& metadata = nlohmann::json::object());
/// Throws FormatError with a JSON pointer to the offending field.
GraphDocument graph_from_json(const nlohmann::json& doc, const std::string& pointer = "");

/// Pretty-printed JSON with sorted keys and a trailing newline.
std::string serialize_graph(const WeightedGraph& g,
                            const nlohmann::json& metadata = nlohmann::json::object());
std::string serialize_graph(const GraphDocument& doc);
/// Throws FormatError ("line N" for syntax errors).
GraphDocument parse_graph(std::string_view bytes);

/// {source, target, vertex_map: [[src id, dst id]...], edge_map: [[src edge,
/// dst edge]...], window?: {root, radius}}.
std::string serialize_covering(const CoveringMap& c);
CoveringMap parse_covering(std::string_view bytes);

struct DotOptions {
  bool labels = true;
  bool weights = false;
  std::string name = "G";
};

/// One statement per vertex and one per edge (loops and parallel edges
/// listed individually).
std::string export_dot(const WeightedGraph& g, const DotOptions& options = {});

/// Header "level,index,value,in_target"; one eigenvalue per row.
std::string export_csv(std::span<const SweepLevel> levels);
std::string export_csv(const SpectrumReport& report, unsigned level);

nlohmann::json to_json(const SpectrumReport& report);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

}  // namespace gomega
