#include "lpa/sampling.hpp"

#include <stdexcept>

namespace lpa {

namespace {

std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

long long between(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

}  // namespace

FieldValue random_scalar(const FieldSpec& k, Rng& rng, long long range) {
  if (k.is_finite()) return k.element_at(std::uniform_int_distribution<std::uint64_t>(0, k.order() - 1)(rng));
  auto rational = [&] { return mpq_class(static_cast<long>(between(rng, -range, range)), static_cast<unsigned long>(between(rng, 1, 3))); };
  if (k.kind() == FieldKind::rationals) {
    mpq_class q = rational();
    q.canonicalize();
    return q;
  }
  GaussianValue z{rational(), rational()};
  z.re.canonicalize();
  z.im.canonicalize();
  return z;
}

Monomial random_monomial(const Graph& g, Rng& rng, std::size_t max_length) {
  if (g.empty()) throw std::invalid_argument("random_monomial: empty graph");
  Path p = Path::trivial(below(rng, g.vertex_count()));
  VertexIndex end = p.base;
  for (std::size_t n = below(rng, max_length + 1); n > 0 && !g.is_sink(end); --n) {
    auto out = g.out_edges(end);
    EdgeIndex e = out[below(rng, out.size())];
    p.edges.push_back(e);
    end = g.range(e);
  }
  std::vector<EdgeIndex> back;
  VertexIndex start = end;
  for (std::size_t n = below(rng, max_length + 1); n > 0 && !g.is_source(start); --n) {
    auto in = g.in_edges(start);
    EdgeIndex e = in[below(rng, in.size())];
    back.push_back(e);
    start = g.source(e);
  }
  Path q{start, {back.rbegin(), back.rend()}};
  return {p, q};
}

Element random_element(const GraphPtr& g, const FieldSpec& k, Rng& rng, const SampleOptions& opt) {
  Element x(g, k);
  if (g->empty()) return x;
  for (std::size_t n = 1 + below(rng, opt.max_terms); n > 0; --n)
    x.accumulate(random_monomial(*g, rng, opt.max_length), random_scalar(k, rng, opt.coeff_range));
  return x;
}

Element random_nonzero_element(const GraphPtr& g, const FieldSpec& k, Rng& rng, const SampleOptions& opt) {
  if (g->empty()) throw std::invalid_argument("random_nonzero_element: empty graph");
  for (;;) {
    Element x = random_element(g, k, rng, opt);
    if (!x.is_zero()) return x;
  }
}

Word random_word(const Graph& g, Rng& rng, std::size_t max_letters) {
  if (g.empty()) throw std::invalid_argument("random_word: empty graph");
  const std::size_t nv = g.vertex_count(), ne = g.edge_count();
  auto any_letter = [&]() -> Letter {
    std::size_t i = below(rng, nv + 2 * ne);
    if (i < nv) return {LetterKind::vertex, i};
    i -= nv;
    return i < ne ? Letter{LetterKind::edge, i} : Letter{LetterKind::ghost, i - ne};
  };
  auto right = [&](const Letter& l) {
    switch (l.kind) {
      case LetterKind::vertex: return l.index;
      case LetterKind::edge: return g.range(l.index);
      case LetterKind::ghost: return g.source(l.index);
    }
    return VertexIndex{0};
  };

  Word w{any_letter()};
  for (std::size_t n = below(rng, max_letters); n > 0; --n) {
    if (below(rng, 5) == 0) {
      w.push_back(any_letter());
      continue;
    }
    VertexIndex at = right(w.back());
    std::vector<Letter> next{{LetterKind::vertex, at}};
    for (EdgeIndex e : g.out_edges(at)) next.push_back({LetterKind::edge, e});
    for (EdgeIndex e : g.in_edges(at)) next.push_back({LetterKind::ghost, e});
    w.push_back(next[below(rng, next.size())]);
  }
  return w;
}

RawTerm random_raw_term(const Graph& g, const FieldSpec& k, Rng& rng, std::size_t max_letters) {
  return {random_scalar(k, rng), random_word(g, rng, max_letters)};
}

}  // namespace lpa
