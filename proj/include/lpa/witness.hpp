#pragma once

// Constructive certificates for finite acyclic graphs. Every certificate is
// built through the matrix image and then re-verified by algebra arithmetic
// alone, via the claim language below.
//
// Claims are equations between products of named elements:
//   "a b a = a", "p* = p", "a* a = 0", "a != 0", "w w' = 1"
// where "0" and "1" are the zero and identity elements and a trailing '*'
// applies the involution.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpa/element.hpp"

namespace lpa {

struct ProjectionCertificate {
  Element p;
  Element factor;  // a * factor = p
};

struct UnitRegularCertificate {
  Element u;
  Element u_prime;
  Element v;
};

/// The projection construction failed because the involution is not proper
/// on this algebra; carries a nonzero c with c* c = 0 when one exists.
class NotStarRegular : public std::runtime_error {
 public:
  explicit NotStarRegular(std::optional<Element> certificate);
  const std::optional<Element>& certificate() const { return certificate_; }

 private:
  std::optional<Element> certificate_;
};

class WitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// b with a b a = a. Throws CyclicGraph.
Element regular_witness(const Element& a);

/// Projection p with p R = a R: computes an idempotent x = a b, solves
/// x = t (x* x), and sets p = t x*. Throws NotStarRegular when the solve is
/// inconsistent, CyclicGraph for cyclic graphs.
ProjectionCertificate projection_generator(const Element& a);

/// sum_i x_i alpha_i alpha_1* over the first vertex v with mu(v) above the
/// properness level, where (x_i) is improper_tuple(level + 1). nullopt when
/// sigma <= properness level. Throws CyclicGraph.
std::optional<Element> improper_element(const GraphPtr& graph, const FieldSpec& field);

/// u, u' with u u' = v = u' u, v a = a v = a and a u a = a, where v is the
/// identity (sum of all vertices). Throws CyclicGraph.
UnitRegularCertificate unit_regular_witness(const Element& a);

/// w = u + (1 - v), w' = u' + (1 - v). Throws WitnessError unless
/// u u' = v = u' u with u, u' in v L v.
std::pair<Element, Element> extend_to_unit(const Element& u, const Element& u_prime, const Element& v);

using NamedElements = std::map<std::string, Element>;

struct ClaimResult {
  std::string claim;
  bool holds = false;
};

/// Evaluates one claim. Throws std::invalid_argument for malformed claims
/// or unknown names.
bool check_claim(const std::string& claim, const NamedElements& env);
std::vector<ClaimResult> check_claims(const std::vector<std::string>& claims, const NamedElements& env);

namespace claims {
const std::vector<std::string>& regular();     // a, b
const std::vector<std::string>& projection();  // a, p, factor
const std::vector<std::string>& improper();    // a
const std::vector<std::string>& unit();        // a, u, u', v
const std::vector<std::string>& extension();   // a, w, w'
}  // namespace claims

}  // namespace lpa
