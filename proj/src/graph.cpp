#include "lpa/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <set>

namespace lpa {

namespace {

std::string join_errors(const std::vector<std::string>& errors) {
  std::string out;
  for (const auto& e : errors) {
    if (!out.empty()) out += "; ";
    out += e;
  }
  return out;
}

}  // namespace

bool is_valid_identifier(const std::string& id) {
  if (id.empty() || std::isdigit(static_cast<unsigned char>(id.front()))) return false;
  int depth = 0;
  for (char c : id) {
    auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc) || !std::isprint(uc)) return false;
    switch (c) {
      case '+': case '-': case '*': case '.': case '/': case '#': case '"': case '{': case '}':
        return false;
      case '(': ++depth; break;
      case ')':
        if (--depth < 0) return false;
        break;
      default: break;
    }
  }
  return depth == 0;
}

std::vector<std::string> validate(const GraphDecl& decl) {
  std::vector<std::string> errors;
  std::set<std::string> seen;
  std::set<std::string> vertices;
  auto claim = [&](const std::string& id) {
    if (!is_valid_identifier(id)) errors.push_back("invalid identifier '" + id + "'");
    if (!seen.insert(id).second) errors.push_back("duplicate identifier " + id);
  };
  for (const auto& v : decl.vertices) {
    claim(v);
    vertices.insert(v);
  }
  for (const auto& e : decl.edges) {
    claim(e.id);
    if (!vertices.contains(e.src) || !vertices.contains(e.dst))
      errors.push_back("dangling endpoint " + e.id);
  }
  return errors;
}

GraphError::GraphError(std::vector<std::string> errors)
    : std::runtime_error("invalid graph: " + join_errors(errors)), errors_(std::move(errors)) {}

Graph Graph::from(const GraphDecl& decl) {
  if (auto errors = validate(decl); !errors.empty()) throw GraphError(std::move(errors));

  Graph g;
  g.vertices_ = decl.vertices;
  std::sort(g.vertices_.begin(), g.vertices_.end());
  for (VertexIndex i = 0; i < g.vertices_.size(); ++i) g.vertex_index_.emplace(g.vertices_[i], i);

  std::vector<EdgeDecl> edges = decl.edges;
  std::sort(edges.begin(), edges.end(),
            [](const EdgeDecl& a, const EdgeDecl& b) { return a.id < b.id; });
  g.out_.resize(g.vertices_.size());
  g.in_.resize(g.vertices_.size());
  for (const auto& e : edges) {
    EdgeIndex idx = g.edges_.size();
    Edge edge{e.id, g.vertex_index_.at(e.src), g.vertex_index_.at(e.dst)};
    g.out_[edge.source].push_back(idx);
    g.in_[edge.range].push_back(idx);
    g.edge_index_.emplace(e.id, idx);
    g.edges_.push_back(std::move(edge));
  }
  return g;
}

std::optional<EdgeIndex> Graph::special_edge(VertexIndex v) const {
  if (out_[v].empty()) return std::nullopt;
  return out_[v].back();
}

std::optional<VertexIndex> Graph::find_vertex(const std::string& id) const {
  if (auto it = vertex_index_.find(id); it != vertex_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<EdgeIndex> Graph::find_edge(const std::string& id) const {
  if (auto it = edge_index_.find(id); it != edge_index_.end()) return it->second;
  return std::nullopt;
}

VertexIndex Graph::vertex(const std::string& id) const {
  if (auto v = find_vertex(id)) return *v;
  throw std::out_of_range("unknown vertex " + id);
}

EdgeIndex Graph::edge(const std::string& id) const {
  if (auto e = find_edge(id)) return *e;
  throw std::out_of_range("unknown edge " + id);
}

GraphDecl Graph::decl() const {
  GraphDecl d;
  d.vertices = vertices_;
  for (const auto& e : edges_) d.edges.push_back({e.id, vertices_[e.source], vertices_[e.range]});
  return d;
}

bool Graph::operator==(const Graph& other) const {
  if (vertices_ != other.vertices_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& a = edges_[i];
    const auto& b = other.edges_[i];
    if (a.id != b.id || a.source != b.source || a.range != b.range) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Paths

bool path_less(const Path& a, const Path& b) {
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  if (a.edges != b.edges) return a.edges < b.edges;
  return a.base < b.base;
}

VertexIndex path_range(const Graph& g, const Path& p) {
  return p.edges.empty() ? p.base : g.range(p.edges.back());
}

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.base >= g.vertex_count()) return false;
  VertexIndex at = p.base;
  for (EdgeIndex e : p.edges) {
    if (e >= g.edge_count() || g.source(e) != at) return false;
    at = g.range(e);
  }
  return true;
}

std::string format_path(const Graph& g, const Path& p) {
  if (p.edges.empty()) return g.vertex_name(p.base);
  std::string out;
  for (EdgeIndex e : p.edges) {
    if (!out.empty()) out += '.';
    out += g.edge_name(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural predicates and counting

VertexInfo classify_vertex(const Graph& g, const std::string& vertex_id) {
  VertexIndex v = g.vertex(vertex_id);
  return {g.is_sink(v), g.is_source(v), g.out_edges(v).size()};
}

namespace {

// Vertices lying on some closed nontrivial path.
std::vector<bool> on_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> result(n, false);
  for (VertexIndex start = 0; start < n; ++start) {
    std::vector<bool> seen(n, false);
    std::vector<VertexIndex> stack;
    for (EdgeIndex e : g.out_edges(start)) stack.push_back(g.range(e));
    while (!stack.empty()) {
      VertexIndex v = stack.back();
      stack.pop_back();
      if (v == start) {
        result[start] = true;
        break;
      }
      if (seen[v]) continue;
      seen[v] = true;
      for (EdgeIndex e : g.out_edges(v)) stack.push_back(g.range(e));
    }
  }
  return result;
}

}  // namespace

bool is_acyclic(const Graph& g) {
  auto cyc = on_cycle(g);
  return std::none_of(cyc.begin(), cyc.end(), [](bool b) { return b; });
}

std::vector<ExtendedNat> mu_table(const Graph& g) {
  const std::size_t n = g.vertex_count();
  // omega exactly on vertices reachable from a cycle
  std::vector<bool> infinite = on_cycle(g);
  std::vector<VertexIndex> frontier;
  for (VertexIndex v = 0; v < n; ++v)
    if (infinite[v]) frontier.push_back(v);
  while (!frontier.empty()) {
    VertexIndex v = frontier.back();
    frontier.pop_back();
    for (EdgeIndex e : g.out_edges(v)) {
      VertexIndex w = g.range(e);
      if (!infinite[w]) {
        infinite[w] = true;
        frontier.push_back(w);
      }
    }
  }

  std::vector<std::optional<std::uint64_t>> memo(n);
  std::function<std::uint64_t(VertexIndex)> count = [&](VertexIndex v) -> std::uint64_t {
    if (memo[v]) return *memo[v];
    std::uint64_t total = 1;
    for (EdgeIndex e : g.in_edges(v)) {
      std::uint64_t part = count(g.source(e));
      if (total > std::numeric_limits<std::uint64_t>::max() - part)
        throw std::overflow_error("path count overflows 64 bits");
      total += part;
    }
    memo[v] = total;
    return total;
  };

  std::vector<ExtendedNat> table(n);
  for (VertexIndex v = 0; v < n; ++v)
    table[v] = infinite[v] ? ExtendedNat::omega() : ExtendedNat(count(v));
  return table;
}

ExtendedNat mu(const Graph& g, const std::string& vertex_id) {
  return mu_table(g).at(g.vertex(vertex_id));
}

ExtendedNat sigma(const Graph& g) {
  ExtendedNat best(0);
  for (const auto& m : mu_table(g)) best = std::max(best, m);
  return best;
}

std::vector<Path> paths_of_length_to(const Graph& g, VertexIndex v, std::size_t length,
                                     const std::vector<bool>& allowed) {
  std::vector<Path> level{Path::trivial(v)};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Path> next;
    for (const auto& p : level) {
      for (EdgeIndex e : g.in_edges(p.base)) {
        if (!allowed.empty() && !allowed[e]) continue;
        Path q{g.source(e), {e}};
        q.edges.insert(q.edges.end(), p.edges.begin(), p.edges.end());
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), path_less);
  return level;
}

std::vector<Path> enumerate_paths_to(const Graph& g, VertexIndex v) {
  if (mu_table(g).at(v).is_omega())
    throw InfinitePathSet("infinitely many paths end at " + g.vertex_name(v));
  std::vector<Path> all;
  for (std::size_t len = 0;; ++len) {
    auto level = paths_of_length_to(g, v, len);
    if (level.empty()) break;
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

// ---------------------------------------------------------------------------
// Constructions

Graph m_n_graph(const Graph& g, std::size_t n) {
  if (n < 1) throw std::invalid_argument("m_n_graph: n must be at least 1");
  GraphDecl d = g.decl();
  for (const auto& v : g.decl().vertices) {
    // mnv:v:1 -> mnv:v:2 -> ... -> mnv:v:(n-1) -> v
    for (std::size_t k = 1; k < n; ++k) d.vertices.push_back("mnv:" + v + ":" + std::to_string(k));
    for (std::size_t k = 1; k < n; ++k) {
      std::string dst = k + 1 < n ? "mnv:" + v + ":" + std::to_string(k + 1) : v;
      d.edges.push_back({"mne:" + v + ":" + std::to_string(k),
                         "mnv:" + v + ":" + std::to_string(k), dst});
    }
  }
  return Graph::from(d);
}

Graph e_f_graph(const Graph& g, const std::vector<std::string>& edge_ids) {
  if (edge_ids.empty()) throw std::invalid_argument("e_f_graph: F must be non-empty");
  std::set<EdgeIndex> f;
  for (const auto& id : edge_ids) f.insert(g.edge(id));

  std::set<VertexIndex> src_f, rng_f, src_outside;
  for (EdgeIndex e : f) {
    src_f.insert(g.source(e));
    rng_f.insert(g.range(e));
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!f.contains(e)) src_outside.insert(g.source(e));

  // E_F^0 = F u (r(F) n s(F) n s(E^1 \ F)) u (r(F) \ s(F))
  std::set<VertexIndex> vertex_part;
  for (VertexIndex v : rng_f) {
    bool emits_f = src_f.contains(v);
    if ((emits_f && src_outside.contains(v)) || !emits_f) vertex_part.insert(v);
  }

  GraphDecl d;
  for (EdgeIndex e : f) d.vertices.push_back(ef_edge_vertex(g.edge_name(e)));
  for (VertexIndex v : vertex_part) d.vertices.push_back(ef_vertex_vertex(g.vertex_name(v)));

  // E_F^1 = {(e,x) in F x E_F^0 | r(e) = s(x)} u {(e, r(e)) | r(e) in r(F) \ s(F)},
  // with s(x) = x for vertex-type x. The second set is contained in the first.
  std::set<std::pair<std::string, std::string>> pairs;
  for (EdgeIndex e : f) {
    const std::string x = ef_edge_vertex(g.edge_name(e));
    for (EdgeIndex h : f)
      if (g.range(e) == g.source(h)) pairs.emplace(x, ef_edge_vertex(g.edge_name(h)));
    if (vertex_part.contains(g.range(e)))
      pairs.emplace(x, ef_vertex_vertex(g.vertex_name(g.range(e))));
  }
  for (const auto& [x, y] : pairs) d.edges.push_back({ef_edge(x, y), x, y});
  return Graph::from(d);
}

Graph standard_graph(StandardKind kind, std::size_t n) {
  if (n < 1 && kind != StandardKind::toeplitz) throw std::invalid_argument("standard_graph: n must be at least 1");
  GraphDecl d;
  auto vname = [](std::size_t i) { return "v" + std::to_string(i); };
  auto ename = [](std::size_t i) { return "e" + std::to_string(i); };
  switch (kind) {
    case StandardKind::line:
      for (std::size_t i = 1; i <= n; ++i) d.vertices.push_back(vname(i));
      for (std::size_t i = 1; i < n; ++i) d.edges.push_back({ename(i), vname(i), vname(i + 1)});
      break;
    case StandardKind::rose:
      d.vertices.push_back(vname(1));
      for (std::size_t i = 1; i <= n; ++i) d.edges.push_back({ename(i), vname(1), vname(1)});
      break;
    case StandardKind::toeplitz:
      d.vertices = {vname(1), vname(2)};
      d.edges = {{ename(1), vname(1), vname(1)}, {ename(2), vname(1), vname(2)}};
      break;
    case StandardKind::clock:
      throw std::invalid_argument("standard_graph: clock graphs are built with clock_graph(n, m)");
  }
  return Graph::from(d);
}

Graph graph_union(const Graph& a, const Graph& b) {
  GraphDecl d = a.decl();
  GraphDecl other = b.decl();
  std::set<std::string> vs(d.vertices.begin(), d.vertices.end());
  for (const auto& v : other.vertices)
    if (vs.insert(v).second) d.vertices.push_back(v);
  std::map<std::string, EdgeDecl> es;
  for (const auto& e : d.edges) es.emplace(e.id, e);
  for (const auto& e : other.edges) {
    auto [it, inserted] = es.emplace(e.id, e);
    if (!inserted && !(it->second == e))
      throw GraphError({"conflicting edge " + e.id + " in union"});
    if (inserted) d.edges.push_back(e);
  }
  return Graph::from(d);
}

Graph rename(const Graph& g, const std::map<std::string, std::string>& vertices,
             const std::map<std::string, std::string>& edges) {
  auto map_id = [](const std::map<std::string, std::string>& m, const std::string& id) {
    auto it = m.find(id);
    return it == m.end() ? id : it->second;
  };
  GraphDecl d = g.decl();
  for (auto& v : d.vertices) v = map_id(vertices, v);
  for (auto& e : d.edges) {
    e.id = map_id(edges, e.id);
    e.src = map_id(vertices, e.src);
    e.dst = map_id(vertices, e.dst);
  }
  return Graph::from(d);
}

Graph clock_graph(std::size_t n, std::size_t m) {
  Graph line = standard_graph(StandardKind::line, n);
  std::map<std::string, std::string> loops;
  for (std::size_t i = 1; i <= m; ++i) loops.emplace("e" + std::to_string(i), "l" + std::to_string(i));
  Graph rose = rename(standard_graph(StandardKind::rose, m), {{"v1", "v" + std::to_string(n)}}, loops);
  return graph_union(line, rose);
}

}  // namespace lpa
