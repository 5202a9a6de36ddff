#include "lpa/witness.hpp"

#include <sstream>

#include "lpa/properness.hpp"
#include "lpa/semisimple.hpp"

namespace lpa {

NotStarRegular::NotStarRegular(std::optional<Element> certificate)
    : std::runtime_error("not *-regular: the projection equation has no solution"),
      certificate_(std::move(certificate)) {}

namespace {

void require_acyclic(const Graph& g) {
  if (!is_acyclic(g)) throw CyclicGraph("graph has a cycle; witnesses need a finite matrix image");
}

template <typename F>
MatrixImage blockwise(const MatrixImage& m, F&& f) {
  MatrixImage out{m.field, {}};
  for (const auto& b : m.blocks) out.blocks.push_back({b.sink, f(b.matrix)});
  return out;
}

void require_claims(const std::vector<std::string>& list, const NamedElements& env, const char* what) {
  for (const auto& r : check_claims(list, env))
    if (!r.holds) throw std::logic_error(std::string(what) + ": claim failed: " + r.claim);
}

}  // namespace

Element regular_witness(const Element& a) {
  require_acyclic(a.graph());
  MatrixImage b = blockwise(phi(a), [](const Matrix& m) {
    RankFactorization f = rank_factorization(m);
    return f.q_inv * f.d * f.p_inv;
  });
  Element inner = phi_inv(a.graph_ptr(), b);
  require_claims(claims::regular(), {{"a", a}, {"b", inner}}, "regular_witness");
  return inner;
}

ProjectionCertificate projection_generator(const Element& a) {
  require_acyclic(a.graph());
  const GraphPtr& g = a.graph_ptr();
  auto fail = [&]() -> NotStarRegular { return NotStarRegular(improper_element(g, a.field())); };

  Element x = mul(a, regular_witness(a));  // idempotent, x R = a R
  MatrixImage xi = phi(x);
  MatrixImage gram = xi.conj_transpose() * xi;

  // x = t (x* x)
  MatrixImage t{a.field(), {}};
  for (std::size_t i = 0; i < xi.blocks.size(); ++i) {
    auto sol = solve_linear(gram.blocks[i].matrix, xi.blocks[i].matrix, Side::left);
    if (!sol) throw fail();
    t.blocks.push_back({xi.blocks[i].sink, *sol});
  }
  Element p = mul(phi_inv(g, t), star(x));

  // a r = p
  MatrixImage ai = phi(a), pi = phi(p);
  MatrixImage r{a.field(), {}};
  for (std::size_t i = 0; i < ai.blocks.size(); ++i) {
    auto sol = solve_linear(ai.blocks[i].matrix, pi.blocks[i].matrix, Side::right);
    if (!sol) throw fail();
    r.blocks.push_back({ai.blocks[i].sink, *sol});
  }
  ProjectionCertificate cert{p, phi_inv(g, r)};
  for (const auto& c : check_claims(claims::projection(), {{"a", a}, {"p", cert.p}, {"factor", cert.factor}}))
    if (!c.holds) throw fail();
  return cert;
}

std::optional<Element> improper_element(const GraphPtr& graph, const FieldSpec& field) {
  const Graph& g = *graph;
  require_acyclic(g);
  const ExtendedNat level = properness_level(field);
  if (!(sigma(g) > level)) return std::nullopt;

  const std::size_t n = level.value() + 1;
  auto table = mu_table(g);
  VertexIndex v = 0;
  while (!(table[v] > level)) ++v;
  std::vector<Path> paths = enumerate_paths_to(g, v);
  auto tuple = improper_tuple(field, n);
  if (!tuple) throw std::logic_error("improper_element: no improper tuple above the properness level");

  Element a(graph, field);
  for (std::size_t i = 0; i < n; ++i) a.accumulate({paths[i], paths[0]}, (*tuple)[i]);
  require_claims(claims::improper(), {{"a", a}}, "improper_element");
  return a;
}

UnitRegularCertificate unit_regular_witness(const Element& a) {
  require_acyclic(a.graph());
  const GraphPtr& g = a.graph_ptr();
  MatrixImage ai = phi(a);
  MatrixImage u{a.field(), {}}, u_prime{a.field(), {}};
  for (const auto& b : ai.blocks) {
    RankFactorization f = rank_factorization(b.matrix);
    u.blocks.push_back({b.sink, f.q_inv * f.p_inv});
    u_prime.blocks.push_back({b.sink, f.p * f.q});
  }
  UnitRegularCertificate cert{phi_inv(g, u), phi_inv(g, u_prime), Element::identity(g, a.field())};
  require_claims(claims::unit(), {{"a", a}, {"u", cert.u}, {"u'", cert.u_prime}, {"v", cert.v}},
                 "unit_regular_witness");
  return cert;
}

std::pair<Element, Element> extend_to_unit(const Element& u, const Element& u_prime, const Element& v) {
  NamedElements env{{"u", u}, {"u'", u_prime}, {"v", v}};
  for (const char* c : {"u u' = v", "u' u = v", "v u = u", "u v = u", "v u' = u'", "u' v = u'"})
    if (!check_claim(c, env)) throw WitnessError(std::string("extend_to_unit: precondition fails: ") + c);
  Element one = Element::identity(u.graph_ptr(), u.field());
  Element complement = sub(one, v);
  Element w = add(u, complement);
  Element w_prime = add(u_prime, complement);
  if (!(mul(w, w_prime) == one) || !(mul(w_prime, w) == one))
    throw std::logic_error("extend_to_unit: w w' != 1");
  return {w, w_prime};
}

// ---------------------------------------------------------------------------
// Claims

namespace {

Element evaluate_side(const std::string& side, const NamedElements& env, const Element& like) {
  std::istringstream in(side);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.empty()) throw std::invalid_argument("empty side in claim");
  if (tokens.size() == 1 && tokens[0] == "0") return Element(like.graph_ptr(), like.field());
  if (tokens.size() == 1 && tokens[0] == "1") return Element::identity(like.graph_ptr(), like.field());
  std::optional<Element> acc;
  for (auto t : tokens) {
    bool adjoint = t.size() > 1 && t.back() == '*';
    if (adjoint) t.pop_back();
    auto it = env.find(t);
    if (it == env.end()) throw std::invalid_argument("unknown name in claim: " + t);
    Element f = adjoint ? star(it->second) : it->second;
    acc = acc ? mul(*acc, f) : f;
  }
  return *acc;
}

}  // namespace

bool check_claim(const std::string& claim, const NamedElements& env) {
  if (env.empty()) throw std::invalid_argument("claim evaluated without elements");
  const Element& like = env.begin()->second;
  bool negated = false;
  std::size_t pos = claim.find("!=");
  std::size_t len = 2;
  if (pos != std::string::npos) negated = true;
  else {
    pos = claim.find('=');
    len = 1;
  }
  if (pos == std::string::npos) throw std::invalid_argument("claim without '=': " + claim);
  Element lhs = evaluate_side(claim.substr(0, pos), env, like);
  Element rhs = evaluate_side(claim.substr(pos + len), env, like);
  return negated != (lhs == rhs);
}

std::vector<ClaimResult> check_claims(const std::vector<std::string>& list, const NamedElements& env) {
  std::vector<ClaimResult> out;
  for (const auto& c : list) out.push_back({c, check_claim(c, env)});
  return out;
}

namespace claims {

const std::vector<std::string>& regular() {
  static const std::vector<std::string> c{"a b a = a"};
  return c;
}
const std::vector<std::string>& projection() {
  static const std::vector<std::string> c{"p* = p", "p p = p", "p a = a", "a factor = p"};
  return c;
}
const std::vector<std::string>& improper() {
  static const std::vector<std::string> c{"a != 0", "a* a = 0"};
  return c;
}
const std::vector<std::string>& unit() {
  static const std::vector<std::string> c{"u u' = v", "u' u = v", "v a = a", "a v = a", "a u a = a"};
  return c;
}
const std::vector<std::string>& extension() {
  static const std::vector<std::string> c{"w w' = 1", "w' w = 1", "a w a = a"};
  return c;
}

}  // namespace claims

}  // namespace lpa
