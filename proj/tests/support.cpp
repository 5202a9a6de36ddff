#include "support.hpp"

#include "lpa/io.hpp"
#include "lpa/matrix.hpp"

namespace lpa::test {

GraphPtr line(std::size_t n) { return share(standard_graph(StandardKind::line, n)); }
GraphPtr rose(std::size_t n) { return share(standard_graph(StandardKind::rose, n)); }
GraphPtr toeplitz() { return share(standard_graph(StandardKind::toeplitz, 0)); }
GraphPtr clock(std::size_t n, std::size_t m) { return share(clock_graph(n, m)); }
GraphPtr single_vertex() { return from_text("vertex v\n"); }
GraphPtr empty_graph() { return share(Graph::from({})); }
GraphPtr from_text(const std::string& text) { return share(parse_graph_text(text)); }

const std::vector<NamedGraph>& corpus() {
  static const std::vector<NamedGraph> graphs = [] {
    std::vector<NamedGraph> gs;
    for (std::size_t n = 1; n <= 5; ++n) gs.push_back({"line_" + std::to_string(n), line(n)});
    gs.push_back({"line_2+vertex", from_text("vertex v1\nvertex v2\nvertex w\nedge e1 v1 v2\n")});
    gs.push_back({"line_3+line_2", share(graph_union(*line(3), rename(*line(2), {{"v1", "u1"}, {"v2", "u2"}},
                                                                              {{"e1", "f1"}})))});
    gs.push_back({"in_tree", from_text("vertex a1\nvertex a2\nvertex a3\nvertex a4\n"
                                       "vertex b1\nvertex b2\nvertex c\n"
                                       "edge x1 a1 b1\nedge x2 a2 b1\nedge x3 a3 b2\nedge x4 a4 b2\n"
                                       "edge y1 b1 c\nedge y2 b2 c\n")});
    gs.push_back({"rose_1", rose(1)});
    gs.push_back({"rose_2", rose(2)});
    gs.push_back({"toeplitz", toeplitz()});
    gs.push_back({"clock_3_2", clock(3, 2)});
    return gs;
  }();
  return graphs;
}

std::vector<NamedGraph> acyclic_corpus() {
  std::vector<NamedGraph> out;
  for (const auto& ng : corpus())
    if (walk_acyclic(*ng.graph)) out.push_back(ng);
  return out;
}

const std::vector<FieldSpec>& five_fields() {
  static const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::gaussian(Involution::identity),
                                             FieldSpec::gaussian(Involution::conjugation), FieldSpec::prime(3),
                                             FieldSpec::quadratic(3)};
  return fields;
}

std::vector<ExtendedNat> walk_mu(const Graph& g) {
  const std::size_t limit = g.vertex_count();
  std::vector<ExtendedNat> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::uint64_t count = 0;
    bool unbounded = false;
    // walk backwards; depth counts edges taken so far
    std::function<void(VertexIndex, std::size_t)> walk = [&](VertexIndex at, std::size_t depth) {
      if (unbounded) return;
      ++count;
      if (depth == limit) {
        unbounded = true;
        return;
      }
      for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (g.range(e) == at) walk(g.source(e), depth + 1);
    };
    walk(v, 0);
    out.push_back(unbounded ? ExtendedNat::omega() : ExtendedNat(count));
  }
  return out;
}

bool walk_acyclic(const Graph& g) {
  for (const auto& m : walk_mu(g))
    if (m.is_omega()) return false;
  return true;
}

void for_each_element(const FieldSpec& k, const std::function<void(const FieldValue&)>& f) {
  const std::uint64_t p = k.characteristic();
  if (k.kind() == FieldKind::prime) {
    for (std::uint64_t a = 0; a < p; ++a) f(k.from_int(static_cast<long long>(a)));
    return;
  }
  const FieldValue t = k.generator();
  for (std::uint64_t b = 0; b < p; ++b)
    for (std::uint64_t a = 0; a < p; ++a)
      f(k.add(k.from_int(static_cast<long long>(a)), k.mul(k.from_int(static_cast<long long>(b)), t)));
}

namespace {

std::vector<FieldValue> elements(const FieldSpec& k) {
  std::vector<FieldValue> xs;
  for_each_element(k, [&](const FieldValue& x) { xs.push_back(x); });
  return xs;
}

// Odometer over all n-tuples of field elements.
bool any_tuple(const std::vector<FieldValue>& xs, std::size_t n,
               const std::function<bool(const std::vector<FieldValue>&)>& pred) {
  std::vector<std::size_t> idx(n, 0);
  std::vector<FieldValue> t(n, xs[0]);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) t[i] = xs[idx[i]];
    if (pred(t)) return true;
    std::size_t i = 0;
    while (i < n && ++idx[i] == xs.size()) idx[i++] = 0;
    if (i == n) return false;
  }
}

}  // namespace

std::size_t brute_level(const FieldSpec& k, std::size_t max_n) {
  const auto xs = elements(k);
  for (std::size_t n = 1; n <= max_n; ++n) {
    bool improper = any_tuple(xs, n, [&](const std::vector<FieldValue>& t) {
      bool nonzero = false;
      FieldValue sum = k.zero();
      for (const auto& x : t) {
        nonzero = nonzero || !k.is_zero(x);
        sum = k.add(sum, k.mul(k.conj(x), x));
      }
      return nonzero && k.is_zero(sum);
    });
    if (improper) return n - 1;
  }
  return max_n + 1;
}

bool brute_has_annihilated_matrix(const FieldSpec& k, std::size_t n) {
  const auto xs = elements(k);
  return any_tuple(xs, n * n, [&](const std::vector<FieldValue>& t) {
    Matrix a(k, n, n);
    for (std::size_t i = 0; i < n * n; ++i) a.set(i / n, i % n, t[i]);
    return !a.is_zero() && (a.conj_transpose() * a).is_zero();
  });
}

}  // namespace lpa::test
