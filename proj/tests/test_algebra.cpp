#include <doctest.h>

#include "lpa/expr.hpp"
#include "lpa/rewrite.hpp"
#include "lpa/sampling.hpp"
#include "support.hpp"

using namespace lpa;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Element ex(const GraphPtr& g, const std::string& s, const FieldSpec& k = Q) { return parse_element(s, g, k); }

Element V(const GraphPtr& g, const std::string& v, const FieldSpec& k = Q) {
  return Element::vertex(g, k, g->vertex(v));
}
Element E(const GraphPtr& g, const std::string& e, const FieldSpec& k = Q) { return Element::edge(g, k, g->edge(e)); }
Element G(const GraphPtr& g, const std::string& e, const FieldSpec& k = Q) {
  return Element::ghost(g, k, g->edge(e));
}

}  // namespace

TEST_CASE("normalize examples") {
  auto r2 = lpa::test::rose(2);
  CHECK(mul(E(r2, "e2"), G(r2, "e2")) == sub(V(r2, "v1"), mul(E(r2, "e1"), G(r2, "e1"))));
  auto r1 = lpa::test::rose(1);
  CHECK(mul(E(r1, "e1"), G(r1, "e1")) == V(r1, "v1"));
  Element x = add(E(r2, "e1"), G(r2, "e2"));
  Element again(r2, Q);
  for (const auto& [m, c] : x.terms()) again.accumulate(m, c);
  CHECK(again == x);
}

TEST_CASE("normal monomials only") {
  Rng rng(3);
  for (const auto& [name, g] : lpa::test::corpus()) {
    for (int i = 0; i < 100; ++i) {
      Element x = random_element(g, Q, rng);
      for (const auto& [m, c] : x.terms()) {
        CHECK(is_normal_monomial(*g, m));
        CHECK_FALSE(Q.is_zero(c));
      }
    }
  }
}

TEST_CASE("mul examples") {
  auto l2 = lpa::test::line(2);
  CHECK(mul(V(l2, "v1"), V(l2, "v2")).is_zero());
  CHECK(mul(G(l2, "e1"), E(l2, "e1")) == V(l2, "v2"));
  auto r2 = lpa::test::rose(2);
  CHECK(mul(G(r2, "e1"), E(r2, "e2")).is_zero());
  auto other = lpa::test::line(3);
  CHECK_THROWS_AS(mul(V(l2, "v1"), V(other, "v1")), AlgebraMismatch);
  CHECK_THROWS_AS(mul(V(l2, "v1"), V(l2, "v1", FieldSpec::prime(3))), AlgebraMismatch);
}

TEST_CASE("star examples") {
  auto l2 = lpa::test::line(2);
  CHECK(star(V(l2, "v1")) == V(l2, "v1"));
  Element s = star(E(l2, "e1"));
  REQUIRE(s.size() == 1);
  const Monomial& m = s.terms().begin()->first;
  CHECK(m.p.is_trivial());
  CHECK(m.q.edges == std::vector<EdgeIndex>{l2->edge("e1")});
  FieldSpec c = FieldSpec::gaussian(Involution::conjugation);
  CHECK(star(ex(l2, "(1+i)*e1", c)) == ex(l2, "(1-i)*e1*", c));
}

TEST_CASE("linear_combine, eq and local_unit") {
  auto l2 = lpa::test::line(2);
  Element x = ex(l2, "e1 + 2*v2");
  CHECK(linear_combine({{Q.one(), x}, {Q.from_int(-1), x}}).is_zero());
  CHECK(linear_combine({{Q.zero(), x}}).is_zero());
  CHECK(linear_combine({{Q.one(), V(l2, "v1")}, {Q.one(), V(l2, "v2")}}).size() == 2);
  CHECK_THROWS(linear_combine({}));

  auto r1 = lpa::test::rose(1);
  CHECK(eq(mul(G(r1, "e1"), E(r1, "e1")), V(r1, "v1")));
  CHECK(eq(V(l2, "v1"), mul(E(l2, "e1"), G(l2, "e1"))));
  CHECK_FALSE(eq(E(l2, "e1"), G(l2, "e1")));

  CHECK(local_unit(E(l2, "e1")) == ex(l2, "v1 + v2"));
  CHECK(local_unit(V(l2, "v1")) == V(l2, "v1"));
  CHECK(local_unit(Element(l2, Q)).is_zero());
}

TEST_CASE("property: ring and involution laws on the corpus") {
  Rng rng(5);
  for (const auto& k : lpa::test::five_fields()) {
    for (const auto& [name, g] : lpa::test::corpus()) {
      CAPTURE(name);
      CAPTURE(k.name());
      for (int i = 0; i < 25; ++i) {
        Element x = random_element(g, k, rng), y = random_element(g, k, rng), z = random_element(g, k, rng);
        FieldValue c = random_scalar(k, rng);
        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
        CHECK(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
        CHECK(mul(add(x, y), z) == add(mul(x, z), mul(y, z)));
        CHECK(star(star(x)) == x);
        CHECK(star(add(x, y)) == add(star(x), star(y)));
        CHECK(star(mul(x, y)) == mul(star(y), star(x)));
        CHECK(star(scale(c, x)) == scale(k.conj(c), star(x)));
        Element u = local_unit(x);
        CHECK(mul(u, x) == x);
        CHECK(mul(x, u) == x);
      }
    }
  }
}

TEST_CASE("vertices are orthogonal idempotents and independent") {
  for (const auto& [name, g] : lpa::test::corpus()) {
    for (VertexIndex v = 0; v < g->vertex_count(); ++v)
      for (VertexIndex w = 0; w < g->vertex_count(); ++w) {
        Element p = mul(Element::vertex(g, Q, v), Element::vertex(g, Q, w));
        CHECK(p == (v == w ? Element::vertex(g, Q, v) : Element(g, Q)));
      }
    Element sum(g, Q);
    for (VertexIndex v = 0; v < g->vertex_count(); ++v) sum = add(sum, scale(Q.from_int(1 + static_cast<long long>(v)), Element::vertex(g, Q, v)));
    CHECK(sum.size() == g->vertex_count());
  }
}

TEST_CASE("rewriting strategies and evaluate_word agree") {
  Rng rng(9);
  for (const auto& [name, g] : lpa::test::corpus()) {
    CAPTURE(name);
    for (int i = 0; i < 200; ++i) {
      std::vector<RawTerm> terms;
      for (int j = 0; j < 3; ++j) terms.push_back(random_raw_term(*g, Q, rng));
      Element left = reduce_words(g, Q, terms, Strategy::leftmost);
      Element right = reduce_words(g, Q, terms, Strategy::rightmost);
      CHECK(left == right);
      Element via_mul(g, Q);
      for (const auto& t : terms) via_mul = add(via_mul, scale(t.coefficient, evaluate_word(g, Q, t.word)));
      CHECK(left == via_mul);
    }
  }
}

TEST_CASE("monomial words reduce to themselves") {
  Rng rng(13);
  for (const auto& [name, g] : lpa::test::corpus()) {
    for (int i = 0; i < 50; ++i) {
      Element x = random_element(g, Q, rng);
      for (const auto& [m, c] : x.terms()) {
        Element y = reduce_words(g, Q, {{c, monomial_word(m)}});
        CHECK(y == Element::monomial(g, Q, m, c));
      }
    }
  }
}
