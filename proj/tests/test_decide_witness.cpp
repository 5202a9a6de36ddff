#include <doctest.h>

#include "lpa/decide.hpp"
#include "lpa/expr.hpp"
#include "lpa/properness.hpp"
#include "lpa/sampling.hpp"
#include "lpa/witness.hpp"
#include "support.hpp"

using namespace lpa;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GI = FieldSpec::gaussian(Involution::identity);
const FieldSpec GC = FieldSpec::gaussian(Involution::conjugation);

Element ex(const GraphPtr& g, const std::string& s, const FieldSpec& k = Q) { return parse_element(s, g, k); }

}  // namespace

TEST_CASE("is_regular") {
  CHECK(is_regular(*lpa::test::line(2)));
  CHECK_FALSE(is_regular(*lpa::test::rose(1)));
  CHECK(is_regular(*lpa::test::empty_graph()));
}

TEST_CASE("is_star_regular") {
  CHECK_FALSE(is_star_regular(*lpa::test::line(2), GI));
  CHECK(is_star_regular(*lpa::test::line(2), GC));
  CHECK(is_star_regular(*lpa::test::single_vertex(), FieldSpec::prime(2)));
  CHECK(is_star_regular(*lpa::test::line(2), FieldSpec::prime(3)));
  CHECK_FALSE(is_star_regular(*lpa::test::line(3), FieldSpec::prime(3)));
  CHECK_FALSE(is_star_regular(*lpa::test::rose(2), Q));
}

TEST_CASE("is_positive_definite_algebra") {
  for (const auto& [name, g] : lpa::test::corpus()) {
    CHECK(is_positive_definite_algebra(*g, Q));
    CHECK(is_positive_definite_algebra(*g, GC));
    CHECK_FALSE(is_positive_definite_algebra(*g, FieldSpec::prime(3)));
  }
  CHECK_THROWS(is_positive_definite_algebra(*lpa::test::empty_graph(), Q));
}

TEST_CASE("proper_algebra") {
  CHECK(proper_algebra(lpa::test::rose(2), Q).status == ProperStatus::proper);
  FieldSpec f2 = FieldSpec::prime(2);
  auto l2 = lpa::test::line(2);
  ProperAlgebra pa = proper_algebra(l2, f2);
  CHECK(pa.status == ProperStatus::improper);
  REQUIRE(pa.certificate);
  CHECK(*pa.certificate == ex(l2, "v2 + e1", f2));
  CHECK(mul(star(*pa.certificate), *pa.certificate).is_zero());
  CHECK(proper_algebra(lpa::test::rose(1), f2).status == ProperStatus::unknown);
  CHECK(proper_algebra(l2, FieldSpec::prime(3)).status == ProperStatus::proper);
}

TEST_CASE("full_report examples and invariants") {
  auto r = full_report(lpa::test::line(2), Q);
  CHECK(r.regular);
  CHECK(r.star_regular);
  CHECK(r.sigma == 2);
  CHECK(r.properness_level == ExtendedNat::omega());
  auto r5 = full_report(lpa::test::line(2), FieldSpec::prime(5));
  CHECK(r5.regular);
  CHECK_FALSE(r5.star_regular);
  for (const auto& k : lpa::test::five_fields()) {
    auto rr = full_report(lpa::test::rose(1), k);
    CHECK_FALSE(rr.regular);
    CHECK_FALSE(rr.star_regular);
  }

  for (const auto& k : lpa::test::five_fields())
    for (const auto& [name, g] : lpa::test::corpus()) {
      auto d = full_report(g, k);
      CAPTURE(name);
      CHECK((!d.star_regular || d.regular));
      CHECK(d.star_regular == (d.acyclic && d.sigma <= d.properness_level));
      CHECK(d.positive_definite_algebra == d.properness_level.is_omega());
      CHECK(d.mu_table.size() == g->vertex_count());
      CHECK(d.proper_algebra.certificate.has_value() == (d.proper_algebra.status == ProperStatus::improper));
    }
}

TEST_CASE("monotonicity: adding a path into a sink never helps") {
  for (const auto& k : lpa::test::five_fields())
    for (const auto& [name, g] : lpa::test::acyclic_corpus()) {
      GraphDecl d = g->decl();
      std::string sink;
      for (VertexIndex v = 0; v < g->vertex_count(); ++v)
        if (g->is_sink(v)) sink = g->vertex_name(v);
      d.vertices.push_back("zz_new");
      d.edges.push_back({"zz_edge", "zz_new", sink});
      Graph bigger = Graph::from(d);
      CHECK(sigma(bigger) >= sigma(*g));
      if (!is_star_regular(*g, k)) CHECK_FALSE(is_star_regular(bigger, k));
    }
}

TEST_CASE("regular_witness examples") {
  auto l2 = lpa::test::line(2);
  CHECK(regular_witness(ex(l2, "v1")) == ex(l2, "v1"));
  CHECK(regular_witness(ex(l2, "e1")) == ex(l2, "e1*"));
  CHECK(regular_witness(Element(l2, Q)).is_zero());
  CHECK_THROWS_AS(regular_witness(ex(lpa::test::rose(1), "v1")), CyclicGraph);
}

TEST_CASE("projection_generator examples") {
  auto l2 = lpa::test::line(2);
  auto c = projection_generator(ex(l2, "e1"));
  CHECK(c.p == ex(l2, "v1"));
  CHECK(c.p == ex(l2, "e1.e1*"));
  CHECK(mul(ex(l2, "e1"), c.factor) == c.p);
  CHECK(projection_generator(ex(l2, "v2")).p == ex(l2, "v2"));

  FieldSpec f5 = FieldSpec::prime(5);
  try {
    projection_generator(ex(l2, "v2 + 2*e1", f5));
    FAIL("expected NotStarRegular");
  } catch (const NotStarRegular& e) {
    REQUIRE(e.certificate());
    CHECK(*e.certificate() == ex(l2, "v2 + 2*e1", f5));
  }
}

TEST_CASE("improper_element examples") {
  auto l2 = lpa::test::line(2);
  CHECK(*improper_element(l2, FieldSpec::prime(2)) == ex(l2, "v2 + e1", FieldSpec::prime(2)));
  CHECK(*improper_element(l2, GI) == ex(l2, "v2 + i*e1", GI));
  CHECK_FALSE(improper_element(l2, Q));
  CHECK_THROWS_AS(improper_element(lpa::test::rose(1), FieldSpec::prime(2)), CyclicGraph);
  // GF(3) is 2-proper, so line_3 is the first line needing a certificate
  CHECK_FALSE(improper_element(l2, FieldSpec::prime(3)));
  auto a = improper_element(lpa::test::line(3), FieldSpec::prime(3));
  REQUIRE(a);
  CHECK(mul(star(*a), *a).is_zero());
}

TEST_CASE("unit_regular_witness examples") {
  auto l2 = lpa::test::line(2);
  Element one = Element::identity(l2, Q);
  auto z = unit_regular_witness(Element(l2, Q));
  CHECK(z.u == one);
  CHECK(z.u_prime == one);
  auto e = unit_regular_witness(ex(l2, "e1"));
  CHECK(e.u == ex(l2, "e1 + e1*"));
  CHECK(mul(e.u, e.u) == one);
  auto v = unit_regular_witness(ex(l2, "v1"));
  CHECK(v.u == one);
  CHECK(v.u_prime == one);
}

TEST_CASE("extend_to_unit examples") {
  auto l2 = lpa::test::line(2);
  Element one = Element::identity(l2, Q);
  Element u = ex(l2, "e1 + e1*");
  auto [w, w2] = extend_to_unit(u, u, one);
  CHECK(w == u);
  auto [i1, i2] = extend_to_unit(one, one, one);
  CHECK(i1 == one);
  Element v1 = ex(l2, "v1");
  auto [x, y] = extend_to_unit(v1, v1, v1);
  CHECK(x == one);
  CHECK(y == one);
  CHECK_THROWS_AS(extend_to_unit(ex(l2, "e1"), ex(l2, "e1"), one), WitnessError);
}

TEST_CASE("claims") {
  auto l2 = lpa::test::line(2);
  NamedElements env{{"a", ex(l2, "e1")}, {"b", ex(l2, "e1*")}};
  CHECK(check_claim("a b a = a", env));
  CHECK(check_claim("a* = b", env));
  CHECK(check_claim("a a = 0", env));
  CHECK(check_claim("a != 0", env));
  CHECK(check_claim("b a b = b", env));
  CHECK_FALSE(check_claim("a = b", env));
  CHECK_THROWS(check_claim("a c = a", env));
  CHECK_THROWS(check_claim("a b a", env));
}

TEST_CASE("property: witnesses on random elements") {
  Rng rng(31);
  for (const auto& k : lpa::test::five_fields())
    for (const auto& [name, g] : lpa::test::acyclic_corpus()) {
      CAPTURE(name);
      CAPTURE(k.name());
      const bool sr = is_star_regular(*g, k);
      for (int i = 0; i < 10; ++i) {
        Element a = random_element(g, k, rng);
        Element b = regular_witness(a);
        CHECK(mul(mul(a, b), a) == a);
        auto uc = unit_regular_witness(a);
        CHECK(mul(mul(a, uc.u), a) == a);
        if (sr) {
          auto pc = projection_generator(a);
          CHECK(star(pc.p) == pc.p);
        }
      }
    }
}
