#include "lpa/element.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace lpa {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  std::size_t la = a.p.length() + a.q.length();
  std::size_t lb = b.p.length() + b.q.length();
  if (la != lb) return la < lb;
  if (path_less(a.p, b.p)) return true;
  if (path_less(b.p, a.p)) return false;
  return path_less(a.q, b.q);
}

bool is_valid_monomial(const Graph& g, const Monomial& m) {
  return is_valid_path(g, m.p) && is_valid_path(g, m.q) && path_range(g, m.p) == path_range(g, m.q);
}

bool is_normal_monomial(const Graph& g, const Monomial& m) {
  if (m.p.is_trivial() || m.q.is_trivial()) return true;
  EdgeIndex f = m.p.edges.back();
  return f != m.q.edges.back() || g.special_edge(g.source(f)) != f;
}

Element::Element(GraphPtr graph, FieldSpec field) : graph_(std::move(graph)), field_(field) {
  if (!graph_) throw std::invalid_argument("Element: null graph");
}

Element Element::vertex(GraphPtr graph, FieldSpec field, VertexIndex v) {
  Element x(std::move(graph), field);
  x.accumulate({Path::trivial(v), Path::trivial(v)}, field.one());
  return x;
}

Element Element::edge(GraphPtr graph, FieldSpec field, EdgeIndex e) {
  Element x(std::move(graph), field);
  const Graph& g = x.graph();
  x.accumulate({Path{g.source(e), {e}}, Path::trivial(g.range(e))}, field.one());
  return x;
}

Element Element::ghost(GraphPtr graph, FieldSpec field, EdgeIndex e) {
  Element x(std::move(graph), field);
  const Graph& g = x.graph();
  x.accumulate({Path::trivial(g.range(e)), Path{g.source(e), {e}}}, field.one());
  return x;
}

Element Element::identity(GraphPtr graph, FieldSpec field) {
  Element x(std::move(graph), field);
  for (VertexIndex v = 0; v < x.graph().vertex_count(); ++v)
    x.accumulate({Path::trivial(v), Path::trivial(v)}, field.one());
  return x;
}

Element Element::monomial(GraphPtr graph, FieldSpec field, const Monomial& m, const FieldValue& c) {
  Element x(std::move(graph), field);
  x.accumulate(m, c);
  return x;
}

FieldValue Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Element::add_normal(const Monomial& m, const FieldValue& c) {
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second)) terms_.erase(it);
}

void Element::accumulate(const Monomial& m, const FieldValue& c) {
  field_.check(c);
  const Graph& g = *graph_;
  if (!is_valid_monomial(g, m)) throw AlgebraMismatch("monomial is not valid in the graph");
  if (field_.is_zero(c)) return;

  // Worklist over (CK2)-expansions of trailing special pairs.
  std::vector<std::pair<Monomial, FieldValue>> work{{m, c}};
  while (!work.empty()) {
    auto [mono, coeff] = std::move(work.back());
    work.pop_back();
    if (is_normal_monomial(g, mono)) {
      add_normal(mono, coeff);
      continue;
    }
    EdgeIndex f = mono.p.edges.back();
    VertexIndex w = g.source(f);
    mono.p.edges.pop_back();
    mono.q.edges.pop_back();
    FieldValue minus = field_.neg(coeff);
    for (EdgeIndex e : g.out_edges(w)) {
      if (e == f) continue;
      Monomial branch = mono;
      branch.p.edges.push_back(e);
      branch.q.edges.push_back(e);
      add_normal(branch, minus);
    }
    work.emplace_back(std::move(mono), std::move(coeff));
  }
}

bool Element::operator==(const Element& other) const { return eq(*this, other); }

void require_same_algebra(const Element& x, const Element& y) {
  if (!(x.field() == y.field())) throw AlgebraMismatch("elements over different fields");
  if (x.graph_ptr() != y.graph_ptr() && !(x.graph() == y.graph()))
    throw AlgebraMismatch("elements over different graphs");
}

Element normalize(GraphPtr graph, FieldSpec field, const RawCombination& raw) {
  Element x(std::move(graph), field);
  for (const auto& [c, m] : raw) x.accumulate(m, c);
  return x;
}

namespace {

// (p q*)(r s*) via q* r: gamma when r = q gamma, gamma* when q = r gamma, else 0.
std::optional<Monomial> multiply(const Monomial& a, const Monomial& b) {
  const Path& q = a.q;
  const Path& r = b.p;
  if (q.base != r.base) return std::nullopt;
  if (q.length() <= r.length() && std::equal(q.edges.begin(), q.edges.end(), r.edges.begin())) {
    Monomial out{a.p, b.q};
    out.p.edges.insert(out.p.edges.end(), r.edges.begin() + static_cast<std::ptrdiff_t>(q.length()), r.edges.end());
    return out;
  }
  if (r.length() < q.length() && std::equal(r.edges.begin(), r.edges.end(), q.edges.begin())) {
    Monomial out{a.p, b.q};
    out.q.edges.insert(out.q.edges.end(), q.edges.begin() + static_cast<std::ptrdiff_t>(r.length()), q.edges.end());
    return out;
  }
  return std::nullopt;
}

}  // namespace

Element mul(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const FieldSpec& k = x.field();
  Element out(x.graph_ptr(), k);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      if (auto m = multiply(a, b)) out.accumulate(*m, k.mul(ca, cb));
  return out;
}

Element star(const Element& x) {
  const FieldSpec& k = x.field();
  Element out(x.graph_ptr(), k);
  for (const auto& [m, c] : x.terms()) out.accumulate({m.q, m.p}, k.conj(c));
  return out;
}

Element add(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  Element out = x;
  for (const auto& [m, c] : y.terms()) out.accumulate(m, c);
  return out;
}

Element sub(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  Element out = x;
  for (const auto& [m, c] : y.terms()) out.accumulate(m, x.field().neg(c));
  return out;
}

Element scale(const FieldValue& c, const Element& x) {
  Element out(x.graph_ptr(), x.field());
  for (const auto& [m, v] : x.terms()) out.accumulate(m, x.field().mul(c, v));
  return out;
}

Element linear_combine(const std::vector<std::pair<FieldValue, Element>>& terms) {
  if (terms.empty()) throw std::invalid_argument("linear_combine: empty term list");
  Element out(terms.front().second.graph_ptr(), terms.front().second.field());
  for (const auto& [c, x] : terms) {
    require_same_algebra(out, x);
    for (const auto& [m, v] : x.terms()) out.accumulate(m, x.field().mul(c, v));
  }
  return out;
}

bool eq(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  return x.terms().size() == y.terms().size() &&
         std::equal(x.terms().begin(), x.terms().end(), y.terms().begin(),
                    [](const auto& a, const auto& b) { return a.first == b.first && a.second == b.second; });
}

Element local_unit(const Element& x) {
  std::set<VertexIndex> vs;
  for (const auto& [m, c] : x.terms()) {
    vs.insert(path_source(m.p));
    vs.insert(path_source(m.q));
  }
  Element u(x.graph_ptr(), x.field());
  for (VertexIndex v : vs) u.accumulate({Path::trivial(v), Path::trivial(v)}, x.field().one());
  return u;
}

}  // namespace lpa
