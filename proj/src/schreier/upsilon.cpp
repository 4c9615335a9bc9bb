#include <algorithm>
#include <sstream>

#include "gomega/error.hpp"
#include "gomega/schreier.hpp"

namespace gomega {

UpsilonSpec UpsilonSpec::finite(unsigned n, bool middle_exception) {
  UpsilonSpec s;
  s.kind = Kind::finite;
  s.n = n;
  s.middle_exception = middle_exception;
  return s;
}

UpsilonSpec UpsilonSpec::ray(long long length) {
  UpsilonSpec s;
  s.kind = Kind::ray;
  s.lo = 0;
  s.hi = length;
  return s;
}

UpsilonSpec UpsilonSpec::line(long long lo, long long hi) {
  UpsilonSpec s;
  s.kind = Kind::line;
  s.lo = lo;
  s.hi = hi;
  return s;
}

std::size_t UpsilonSpec::vertex_count() const {
  if (kind == Kind::finite) return std::size_t{1} << n;
  return static_cast<std::size_t>(hi - lo + 1);
}

WeightedGraph upsilon_graph(const UpsilonSpec& spec) {
  if (spec.kind == UpsilonSpec::Kind::finite && (spec.n == 0 || spec.n > 24))
    throw InvalidArgument("Upsilon_n needs 1 <= n <= 24");
  if (spec.kind != UpsilonSpec::Kind::finite && spec.hi < spec.lo)
    throw InvalidArgument("empty Upsilon segment");
  if (spec.kind == UpsilonSpec::Kind::ray && spec.lo != 0)
    throw InvalidArgument("ray segments start at 0");

  const long long lo = spec.kind == UpsilonSpec::Kind::finite ? 0 : spec.lo;
  const long long hi = lo + static_cast<long long>(spec.vertex_count()) - 1;
  std::vector<std::string> names;
  for (long long i = lo; i <= hi; ++i) names.push_back(std::to_string(i));
  WeightedGraph g(spec.vertex_count(), std::move(names));
  const auto at = [lo](long long i) { return static_cast<Vertex>(i - lo); };

  for (long long i = lo; i <= hi; ++i) {
    bool three = false;
    if (spec.kind == UpsilonSpec::Kind::finite) three = (i == lo || i == hi);
    if (spec.kind == UpsilonSpec::Kind::ray) three = (i == 0);
    for (int l = 0; l < (three ? 3 : 1); ++l) g.add_loop(at(i));
  }
  const long long middle = spec.kind == UpsilonSpec::Kind::finite
                               ? (1LL << (spec.n - 1)) - 1
                               : -1;
  for (long long i = lo; i < hi; ++i) {
    const bool odd = (i % 2 + 2) % 2 == 1;
    int edges = odd ? 2 : 1;
    if (odd && spec.middle_exception && i == middle) edges = 0;
    for (int l = 0; l < edges; ++l) g.add_edge(at(i), at(i + 1));
  }
  return g;
}

PathForm path_form(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw NotAPath("empty graph");
  std::vector<std::vector<Vertex>> nbrs(n);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    auto& a = nbrs[e.u];
    if (std::ranges::find(a, e.v) == a.end()) {
      a.push_back(e.v);
      nbrs[e.v].push_back(e.u);
    }
  }
  PathForm pf;
  if (n == 1) {
    pf.order = {0};
    pf.loops = {g.loop_count(0)};
    return pf;
  }
  std::optional<Vertex> start;
  std::size_t ends = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (nbrs[v].size() > 2 || nbrs[v].empty()) {
      std::ostringstream msg;
      msg << "vertex " << g.name(v) << " has " << nbrs[v].size() << " distinct neighbours";
      throw NotAPath(msg.str());
    }
    if (nbrs[v].size() == 1) {
      ++ends;
      if (!start) start = v;
    }
  }
  if (ends != 2) throw NotAPath("graph has a cycle or is disconnected");

  std::optional<Vertex> prev;
  Vertex cur = *start;
  pf.order.push_back(cur);
  while (pf.order.size() <= n) {
    const auto it = std::ranges::find_if(nbrs[cur], [&](Vertex x) { return x != prev; });
    if (it == nbrs[cur].end()) break;
    pf.multiplicity.push_back(g.multiplicity(cur, *it));
    prev = cur;
    cur = *it;
    pf.order.push_back(cur);
  }
  if (pf.order.size() != n) throw NotAPath("graph is disconnected");
  for (Vertex v : pf.order) pf.loops.push_back(g.loop_count(v));
  return pf;
}

namespace {

PathForm positional_form(const WeightedGraph& model) {
  PathForm pf;
  for (Vertex v = 0; v < model.vertex_count(); ++v) {
    pf.order.push_back(v);
    pf.loops.push_back(model.loop_count(v));
    if (v + 1 < model.vertex_count()) pf.multiplicity.push_back(model.multiplicity(v, v + 1));
  }
  return pf;
}

PathForm reversed(const PathForm& pf) {
  PathForm r = pf;
  std::ranges::reverse(r.order);
  std::ranges::reverse(r.loops);
  std::ranges::reverse(r.multiplicity);
  return r;
}

std::optional<std::size_t> first_mismatch(const PathForm& a, const PathForm& b) {
  const std::size_t n = std::min(a.loops.size(), b.loops.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.loops[i] != b.loops[i]) return i;
    if (i < a.multiplicity.size() && i < b.multiplicity.size() &&
        a.multiplicity[i] != b.multiplicity[i])
      return i;
  }
  if (a.loops.size() != b.loops.size()) return n;
  return std::nullopt;
}

}  // namespace

IsomorphismResult check_isomorphic(const WeightedGraph& g, const WeightedGraph& model) {
  IsomorphismResult out;
  if (g.vertex_count() != model.vertex_count()) {
    out.mismatch_position = std::min(g.vertex_count(), model.vertex_count());
    out.message = "vertex counts differ";
    return out;
  }
  const PathForm forward = path_form(g);
  const PathForm target = positional_form(model);
  const PathForm backward = reversed(forward);
  const auto fwd = first_mismatch(forward, target);
  const auto bwd = first_mismatch(backward, target);
  const PathForm* match = !fwd ? &forward : (!bwd ? &backward : nullptr);
  if (match) {
    out.isomorphic = true;
    out.mapping.assign(g.vertex_count(), 0);
    for (std::size_t i = 0; i < match->order.size(); ++i)
      out.mapping[match->order[i]] = static_cast<Vertex>(i);
    return out;
  }
  out.mismatch_position = fwd;
  std::ostringstream msg;
  const std::size_t i = *fwd;
  msg << "position " << i << " (vertex " << g.name(forward.order[i]) << "): loops "
      << forward.loops[i] << " vs " << target.loops[i];
  if (i < forward.multiplicity.size())
    msg << ", edges to next " << forward.multiplicity[i] << " vs " << target.multiplicity[i];
  out.message = msg.str();
  return out;
}

IsomorphismResult check_isomorphic(const WeightedGraph& g, const UpsilonSpec& spec) {
  return check_isomorphic(g, upsilon_graph(spec));
}

}  // namespace gomega
