#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lpa/decide.hpp"
#include "lpa/expr.hpp"
#include "lpa/io.hpp"
#include "lpa/sampling.hpp"
#include "support.hpp"

using namespace lpa;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in, "missing file " << path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// "key : value" lines into a map.
std::map<std::string, std::string> table(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto colon = line.find(" : ");
    std::string key = line.substr(0, colon);
    key.erase(key.find_last_not_of(' ') + 1);
    out[key] = line.substr(colon + 3);
  }
  return out;
}

std::string scalar(const nlohmann::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

TEST_CASE("parse_graph examples") {
  Graph g = parse_graph_text("vertex v1\nvertex v2\nedge e1 v1 v2\n");
  CHECK(g == *lpa::test::line(2));
  try {
    parse_graph_text("edge e1 v1 v2\n");
    FAIL("expected GraphError");
  } catch (const GraphError& e) {
    CHECK(e.errors().front() == "dangling endpoint e1");
  }
  try {
    parse_graph_text("vertex v1\nvertex v1\n");
    FAIL("expected GraphError");
  } catch (const GraphError& e) {
    CHECK(e.errors().front() == "duplicate identifier v1");
  }
  CHECK(parse_graph_text("# comment\n\nvertex v  # trailing\n").vertex_count() == 1);
  try {
    parse_graph_text("vertex v1\n  vertx v2\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(std::string(e.what()) == "line 2, column 3: unknown declaration 'vertx'");
  }
  CHECK_THROWS_AS(parse_graph_text("edge e1 v1\n"), SyntaxError);
}

TEST_CASE("graph JSON") {
  for (const auto& [name, g] : lpa::test::corpus()) {
    CAPTURE(name);
    CHECK(parse_graph_json(format_graph_json(*g)) == *g);
    CHECK(parse_graph(format_graph_json(*g)) == *g);
    CHECK(parse_graph_text(format_graph_text(*g)) == *g);
    CHECK(parse_graph(format_graph_text(*g)) == *g);
  }
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices": [], "edges": [], "extra": 1})"), SyntaxError);
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices": ["v"], "edges": [{"id": "e", "src": "v", "dst": "v", "w": 2}]})"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices": ["v", "v"], "edges": []})"), GraphError);
  CHECK_THROWS_AS(parse_graph_json("{"), SyntaxError);
}

TEST_CASE("parse_element examples") {
  auto l2 = lpa::test::line(2);
  FieldSpec f2 = FieldSpec::prime(2);
  Element a = parse_element("v2 + e1", l2, f2);
  CHECK(a.size() == 2);
  CHECK(mul(star(a), a).is_zero());
  CHECK(parse_element("e1*.e1", l2, Q) == parse_element("v2", l2, Q));
  CHECK_THROWS_WITH_AS(parse_element("e1..e2", l2, Q), doctest::Contains("syntax error"), ExprError);
  CHECK_THROWS_WITH_AS(parse_element("e1.e1", l2, Q), doctest::Contains("invalid monomial"), ExprError);
  CHECK_THROWS_WITH_AS(parse_element("x9", l2, Q), doctest::Contains("unknown identifier"), ExprError);
  CHECK_THROWS_WITH_AS(parse_element("1/0*e1", l2, Q), doctest::Contains("malformed coefficient"), ExprError);
  CHECK_THROWS_AS(parse_element("", l2, Q), ExprError);
  CHECK_THROWS_AS(parse_element("e1 +", l2, Q), ExprError);
  CHECK_THROWS_AS(parse_element("(e1", l2, Q), ExprError);
}

TEST_CASE("expression details") {
  auto l2 = lpa::test::line(2);
  CHECK(parse_element("  - 2 * e1 + e1 * ", l2, Q) == parse_element("-2*e1 + e1*", l2, Q));
  CHECK(parse_element("3", l2, Q) == scale(Q.from_int(3), Element::identity(l2, Q)));
  CHECK(parse_element("0", l2, Q).is_zero());
  CHECK(parse_element("v1*", l2, Q) == parse_element("v1", l2, Q));
  CHECK(parse_element("v1.e1.v2", l2, Q) == parse_element("e1", l2, Q));
  CHECK_THROWS_AS(parse_element("e1*.e1*", l2, Q), ExprError);
  CHECK(parse_element("e1*.e1*", lpa::test::rose(1), Q).size() == 1);
  FieldSpec gi = FieldSpec::gaussian(Involution::identity);
  CHECK(format_element(parse_element("(1+i)*e1 - i*v2", l2, gi)) == "-i*v2 + (1+i)*e1");
  CHECK(format_element(parse_element("-1/2*e1 + e1*", l2, Q)) == "e1* - 1/2*e1");
  FieldSpec f9 = FieldSpec::quadratic(3);
  CHECK(format_element(parse_element("(1+2t)*e1 + t*v1", l2, f9)) == "t*v1 + (1+2t)*e1");
  CHECK(format_element(Element(l2, Q)) == "0");
}

TEST_CASE("E_F identifiers survive the expression grammar") {
  GraphPtr ef = share(e_f_graph(*lpa::test::line(3), {"e1", "e2"}));
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    Element x = random_element(ef, Q, rng);
    CHECK(parse_element(format_element(x), ef, Q) == x);
  }
}

TEST_CASE("property: print/parse round trip on the corpus") {
  Rng rng(43);
  for (const auto& k : lpa::test::five_fields())
    for (const auto& [name, g] : lpa::test::corpus()) {
      CAPTURE(name);
      CAPTURE(k.name());
      for (int i = 0; i < 40; ++i) {
        Element x = random_element(g, k, rng);
        std::string s = format_element(x);
        CHECK(parse_element(s, g, k) == x);
        CHECK(format_element(parse_element(s, g, k)) == s);
      }
    }
}

TEST_CASE("text and JSON reports agree field for field") {
  for (const auto& k : lpa::test::five_fields())
    for (const auto& [name, g] : lpa::test::corpus()) {
      auto r = full_report(g, k);
      auto text = table(format_report_text(r));
      auto j = nlohmann::json::parse(format_report_json(r));
      CAPTURE(name);
      for (const char* key : {"field", "acyclic", "sigma", "properness_level", "regular", "star_regular",
                              "positive_definite_algebra"})
        CHECK(text.at(key) == scalar(j.at(key)));
      for (const auto& [v, m] : j.at("mu_table").items()) CHECK(text.at("mu(" + v + ")") == scalar(m));
      CHECK(text.at("proper_algebra") == scalar(j.at("proper_algebra").at("status")));
      if (j["proper_algebra"].contains("certificate"))
        CHECK(text.at("certificate") == scalar(j["proper_algebra"]["certificate"]));
      else
        CHECK(text.count("certificate") == 0);
    }
}

TEST_CASE("golden decide reports for line_2") {
  const std::map<std::string, std::string> files{{"Q", "Q"},
                                                 {"Q[i]/id", "Qi_id"},
                                                 {"Q[i]/conj", "Qi_conj"},
                                                 {"GF(3)", "GF3"},
                                                 {"GF(3,2)", "GF3_2"}};
  for (const auto& k : lpa::test::five_fields()) {
    auto r = full_report(lpa::test::line(2), k);
    const std::string stem = std::string(LPA_GOLDEN_DIR) + "/decide_line2_" + files.at(k.name());
    CAPTURE(k.name());
    CHECK(format_report_text(r) == slurp(stem + ".txt"));
    CHECK(format_report_json(r) == slurp(stem + ".json"));
  }
}

TEST_CASE("matrix image JSON") {
  auto l2 = lpa::test::line(2);
  auto j = nlohmann::json::parse(format_image_json(*l2, phi(parse_element("e1 + 2*v2", l2, Q))));
  REQUIRE(j.is_array());
  CHECK(j[0]["sink"] == "v2");
  CHECK(j[0]["size"] == 2);
  CHECK(j[0]["rows"] == nlohmann::json::parse(R"([["2","0"],["1","0"]])"));
}

TEST_CASE("certificates round trip and re-verify") {
  auto l2 = lpa::test::line(2);
  FieldSpec f2 = FieldSpec::prime(2);
  Element a = parse_element("v2 + e1", l2, f2);
  Certificate c = make_certificate("improper", *l2, f2, {{"a", a}}, claims::improper());
  Certificate back = parse_certificate_json(format_certificate_json(c));
  CHECK(back.graph == *l2);
  CHECK(back.elements == c.elements);
  auto results = verify_certificate(back);
  REQUIRE(results.size() == 2);
  CHECK(results[0].holds);
  CHECK(results[1].holds);

  // a tampered element fails its claim
  back.elements[0].second = "v2";
  CHECK_FALSE(verify_certificate(back)[1].holds);
  // a certificate may not drop required claims
  back.claims = {"a != 0"};
  CHECK_THROWS_AS(verify_certificate(back), SyntaxError);
}
