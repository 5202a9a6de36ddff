#include "lpa/rewrite.hpp"

#include <optional>
#include <stdexcept>

namespace lpa {

namespace {

struct Rewrite {
  // nullopt means the pair collapses to zero
  std::optional<Letter> single;
  bool zero = false;
  bool ck2 = false;
};

std::optional<Rewrite> redex(const Graph& g, const Letter& x, const Letter& y) {
  using K = LetterKind;
  auto vertex_rule = [](bool keep, Letter out) {
    Rewrite r;
    if (keep) r.single = out;
    else r.zero = true;
    return r;
  };
  if (x.kind == K::vertex) {
    switch (y.kind) {
      case K::vertex: return vertex_rule(x.index == y.index, x);
      case K::edge: return vertex_rule(x.index == g.source(y.index), y);
      case K::ghost: return vertex_rule(x.index == g.range(y.index), y);
    }
  }
  if (y.kind == K::vertex) {
    if (x.kind == K::edge) return vertex_rule(g.range(x.index) == y.index, x);
    return vertex_rule(g.source(x.index) == y.index, x);
  }
  if (x.kind == K::ghost && y.kind == K::edge)
    return vertex_rule(x.index == y.index, Letter{K::vertex, g.range(x.index)});
  if (x.kind == K::edge && y.kind == K::edge) {
    if (g.range(x.index) != g.source(y.index)) return Rewrite{std::nullopt, true, false};
    return std::nullopt;
  }
  if (x.kind == K::ghost && y.kind == K::ghost) {
    if (g.source(x.index) != g.range(y.index)) return Rewrite{std::nullopt, true, false};
    return std::nullopt;
  }
  // edge followed by ghost
  if (g.range(x.index) != g.range(y.index)) return Rewrite{std::nullopt, true, false};
  if (x.index == y.index && g.special_edge(g.source(x.index)) == x.index)
    return Rewrite{std::nullopt, false, true};
  return std::nullopt;
}

Monomial word_monomial(const Graph& g, const Word& w) {
  if (w.size() == 1 && w[0].kind == LetterKind::vertex)
    return {Path::trivial(w[0].index), Path::trivial(w[0].index)};
  Monomial m;
  std::size_t i = 0;
  for (; i < w.size() && w[i].kind == LetterKind::edge; ++i) m.p.edges.push_back(w[i].index);
  for (std::size_t j = w.size(); j-- > i;) {
    if (w[j].kind != LetterKind::ghost) throw std::logic_error("irreducible word not of the form p q*");
    m.q.edges.push_back(w[j].index);
  }
  if (!m.p.edges.empty()) m.p.base = g.source(m.p.edges.front());
  if (!m.q.edges.empty()) m.q.base = g.source(m.q.edges.front());
  if (m.p.edges.empty()) m.p.base = path_range(g, m.q);
  if (m.q.edges.empty()) m.q.base = path_range(g, m.p);
  return m;
}

}  // namespace

Word monomial_word(const Monomial& m) {
  if (m.p.is_trivial() && m.q.is_trivial()) return {Letter{LetterKind::vertex, m.p.base}};
  Word w;
  for (EdgeIndex e : m.p.edges) w.push_back({LetterKind::edge, e});
  for (auto it = m.q.edges.rbegin(); it != m.q.edges.rend(); ++it) w.push_back({LetterKind::ghost, *it});
  return w;
}

Element reduce_words(GraphPtr graph, FieldSpec field, const std::vector<RawTerm>& terms,
                     Strategy strategy) {
  Element out(graph, field);
  const Graph& g = *graph;
  std::vector<RawTerm> work(terms.rbegin(), terms.rend());
  while (!work.empty()) {
    RawTerm t = std::move(work.back());
    work.pop_back();
    if (t.word.empty()) throw std::invalid_argument("empty word");
    if (field.is_zero(t.coefficient)) continue;

    std::optional<std::pair<std::size_t, Rewrite>> hit;
    const std::size_t n = t.word.size();
    for (std::size_t k = 0; k + 1 < n && !hit; ++k) {
      std::size_t i = strategy == Strategy::leftmost ? k : n - 2 - k;
      if (auto r = redex(g, t.word[i], t.word[i + 1])) hit.emplace(i, *r);
    }
    if (!hit) {
      out.accumulate(word_monomial(g, t.word), t.coefficient);
      continue;
    }
    auto [i, r] = *hit;
    if (r.zero) continue;
    auto splice = [&](std::vector<Letter> middle) {
      Word w(t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(i));
      w.insert(w.end(), middle.begin(), middle.end());
      w.insert(w.end(), t.word.begin() + static_cast<std::ptrdiff_t>(i + 2), t.word.end());
      return w;
    };
    if (r.single) {
      work.push_back({t.coefficient, splice({*r.single})});
      continue;
    }
    // CK2: f f* -> s(f) - sum_{e != f} e e*
    EdgeIndex f = t.word[i].index;
    VertexIndex w = g.source(f);
    FieldValue minus = field.neg(t.coefficient);
    for (EdgeIndex e : g.out_edges(w))
      if (e != f) work.push_back({minus, splice({{LetterKind::edge, e}, {LetterKind::ghost, e}})});
    work.push_back({t.coefficient, splice({{LetterKind::vertex, w}})});
  }
  return out;
}

Element evaluate_word(GraphPtr graph, FieldSpec field, const Word& word) {
  if (word.empty()) throw std::invalid_argument("empty word");
  auto gen = [&](const Letter& l) {
    switch (l.kind) {
      case LetterKind::vertex: return Element::vertex(graph, field, l.index);
      case LetterKind::edge: return Element::edge(graph, field, l.index);
      case LetterKind::ghost: return Element::ghost(graph, field, l.index);
    }
    throw std::logic_error("bad letter");
  };
  Element acc = gen(word.front());
  for (std::size_t i = 1; i < word.size(); ++i) acc = mul(acc, gen(word[i]));
  return acc;
}

}  // namespace lpa
