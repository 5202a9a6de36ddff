#pragma once

// Finite directed multigraphs, path counting and the graph transforms used
// to study Leavitt path algebras: M_nE (attach incoming lines) and E_F
// (the finite subgraph construction built from an edge set F).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpa/extended_nat.hpp"

namespace lpa {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct EdgeDecl {
  std::string id;
  std::string src;
  std::string dst;

  bool operator==(const EdgeDecl&) const = default;
};

/// Unvalidated graph description, as read from a file or built by hand.
struct GraphDecl {
  std::vector<std::string> vertices;
  std::vector<EdgeDecl> edges;
};

/// Every invariant violation of `decl`, one message per offending identifier.
/// Empty means valid.
std::vector<std::string> validate(const GraphDecl& decl);

/// True for strings usable as vertex or edge identifiers: non-empty, no
/// whitespace or expression operators, no leading digit, balanced parentheses.
bool is_valid_identifier(const std::string& id);

class GraphError : public std::runtime_error {
 public:
  explicit GraphError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

class InfinitePathSet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CyclicGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A validated finite graph. Vertices and edges are stored sorted by
/// identifier, so index order coincides with lexicographic identifier order.
class Graph {
 public:
  struct Edge {
    std::string id;
    VertexIndex source;
    VertexIndex range;
  };

  Graph() = default;

  /// Throws GraphError listing every violation.
  static Graph from(const GraphDecl& decl);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
  const std::string& edge_name(EdgeIndex e) const { return edges_.at(e).id; }
  VertexIndex source(EdgeIndex e) const { return edges_[e].source; }
  VertexIndex range(EdgeIndex e) const { return edges_[e].range; }

  /// Edges emitted by v, in identifier order.
  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_[v]; }
  std::span<const EdgeIndex> in_edges(VertexIndex v) const { return in_[v]; }

  bool is_sink(VertexIndex v) const { return out_[v].empty(); }
  bool is_source(VertexIndex v) const { return in_[v].empty(); }

  /// The lexicographically greatest edge emitted by v; nullopt for sinks.
  std::optional<EdgeIndex> special_edge(VertexIndex v) const;

  std::optional<VertexIndex> find_vertex(const std::string& id) const;
  std::optional<EdgeIndex> find_edge(const std::string& id) const;
  /// Throws std::out_of_range with the identifier when absent.
  VertexIndex vertex(const std::string& id) const;
  EdgeIndex edge(const std::string& id) const;

  GraphDecl decl() const;

  bool operator==(const Graph& other) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
  std::map<std::string, VertexIndex, std::less<>> vertex_index_;
  std::map<std::string, EdgeIndex, std::less<>> edge_index_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

/// A path: a base vertex and an edge sequence with r(e_i) = s(e_{i+1}).
/// Trivial paths (no edges) are vertices.
struct Path {
  VertexIndex base = 0;
  std::vector<EdgeIndex> edges;

  static Path trivial(VertexIndex v) { return Path{v, {}}; }

  bool is_trivial() const { return edges.empty(); }
  std::size_t length() const { return edges.size(); }

  bool operator==(const Path&) const = default;
};

/// Length first, then lexicographic by edge identifier, then base vertex.
bool path_less(const Path& a, const Path& b);

inline VertexIndex path_source(const Path& p) { return p.base; }
VertexIndex path_range(const Graph& g, const Path& p);
bool is_valid_path(const Graph& g, const Path& p);
std::string format_path(const Graph& g, const Path& p);

struct VertexInfo {
  bool sink = false;
  bool source = false;
  std::size_t out_degree = 0;

  bool operator==(const VertexInfo&) const = default;
};

VertexInfo classify_vertex(const Graph& g, const std::string& vertex_id);

bool is_acyclic(const Graph& g);

/// mu(v) for every vertex, indexed by VertexIndex.
std::vector<ExtendedNat> mu_table(const Graph& g);
ExtendedNat mu(const Graph& g, const std::string& vertex_id);
ExtendedNat sigma(const Graph& g);

/// All paths ending at v (trivial path included), length-then-lexicographic.
/// Throws InfinitePathSet when mu(v) is omega.
std::vector<Path> enumerate_paths_to(const Graph& g, VertexIndex v);

/// Paths of exactly `length` edges ending at v, using only edges accepted by
/// `allowed` (all edges when empty). Works on cyclic graphs.
std::vector<Path> paths_of_length_to(const Graph& g, VertexIndex v, std::size_t length,
                                     const std::vector<bool>& allowed = {});

/// Attaches to every vertex an incoming line with n-1 fresh vertices.
/// Fresh vertex ids are "mnv:<v>:<k>", fresh edge ids "mne:<v>:<k>".
Graph m_n_graph(const Graph& g, std::size_t n);

/// E_F for a non-empty set of edge ids F. Vertices are named "edge:<id>" and
/// "vertex:<id>", edges "(<x>,<y>)" over those names.
Graph e_f_graph(const Graph& g, const std::vector<std::string>& edge_ids);

inline std::string ef_edge_vertex(const std::string& edge_id) { return "edge:" + edge_id; }
inline std::string ef_vertex_vertex(const std::string& vertex_id) { return "vertex:" + vertex_id; }
inline std::string ef_edge(const std::string& x, const std::string& y) {
  return "(" + x + "," + y + ")";
}

enum class StandardKind { line, rose, toeplitz, clock };

/// line: v1..vn with ei: vi -> vi+1. rose: vertex v1 with loops e1..en.
/// toeplitz: loop e1 at v1 plus exit e2: v1 -> v2 (n ignored).
/// clock: use clock_graph().
Graph standard_graph(StandardKind kind, std::size_t n);

/// Union of vertex sets (shared ids merge) and edge sets. An edge id present
/// in both must have identical endpoints.
Graph graph_union(const Graph& a, const Graph& b);

/// Renames identifiers; ids absent from the maps are kept.
Graph rename(const Graph& g, const std::map<std::string, std::string>& vertices,
             const std::map<std::string, std::string>& edges);

/// line_n whose last vertex carries m loops l1..lm.
Graph clock_graph(std::size_t n, std::size_t m);

}  // namespace lpa
