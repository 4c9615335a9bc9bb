#include <sstream>

#include "gomega/io.hpp"

namespace gomega {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::string weight_text(Weight w) {
  if (w.imag() == 0.0) return format_double(w.real());
  return format_double(w.real()) + (w.imag() < 0 ? "" : "+") + format_double(w.imag()) + "i";
}

}  // namespace

std::string export_dot(const WeightedGraph& g, const DotOptions& options) {
  std::ostringstream os;
  os << "graph " << quoted(options.name) << " {\n";
  for (const auto& n : g.names()) os << "  " << quoted(n) << ";\n";
  for (const Edge& e : g.edges()) {
    os << "  " << quoted(g.name(e.u)) << " -- " << quoted(g.name(e.v));
    std::vector<std::string> attrs;
    if (options.labels && !e.label.empty()) attrs.push_back("label=" + quoted(e.label));
    if (options.weights) {
      attrs.push_back("wu=" + quoted(weight_text(e.wu)));
      if (!e.is_loop()) attrs.push_back("wv=" + quoted(weight_text(e.wv)));
    }
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_csv(std::span<const SweepLevel> levels) {
  std::string out = "level,index,value,in_target\n";
  for (const auto& level : levels) {
    std::string block = export_csv(level.report, level.level);
    out += block.substr(block.find('\n') + 1);
  }
  return out;
}

std::string export_csv(const SpectrumReport& report, unsigned level) {
  std::ostringstream os;
  os << "level,index,value,in_target\n";
  for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
    const double x = report.eigenvalues[i];
    const bool in = !report.target || report.target->contains(x, report.tolerance);
    os << level << ',' << i << ',' << format_double(x) << ',' << (in ? 1 : 0) << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const SpectrumReport& report) {
  nlohmann::json eig = nlohmann::json::array(), res = nlohmann::json::array();
  for (double x : report.eigenvalues) eig.push_back(format_double(x));
  for (double x : report.residuals) res.push_back(format_double(x));
  nlohmann::json j{{"dimension", report.dimension},
                   {"partial", report.partial},
                   {"eigenvalues", std::move(eig)},
                   {"residuals", std::move(res)}};
  if (report.target) {
    j["target"] = report.target->to_string();
    j["tolerance"] = format_double(report.tolerance);
    j["contained"] = report.contained;
    j["excess"] = format_double(report.excess);
    j["coverage_gap"] = format_double(report.coverage_gap);
  }
  return j;
}

}  // namespace gomega
