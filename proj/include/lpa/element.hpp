#pragma once

// Elements of the Leavitt path algebra L_K(E) of a finite graph, stored as
// linear combinations of normal monomials p q*.
//
// Normal form: at every non-sink vertex the lexicographically greatest
// outgoing edge is special, and no monomial has p and q ending in the same
// special edge f. (CK2) is oriented as
//
//   f f*  ->  s(f) - sum_{e in s^-1(s(f)), e != f} e e*
//
// which strictly decreases total length or the number of special endings,
// so reduction terminates. The normal monomials form a basis.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lpa/field.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// The monomial p q*; requires r(p) = r(q).
struct Monomial {
  Path p;
  Path q;

  bool operator==(const Monomial&) const = default;
};

/// (|p| + |q|, p, q) with paths compared by path_less.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

bool is_valid_monomial(const Graph& g, const Monomial& m);
bool is_normal_monomial(const Graph& g, const Monomial& m);

class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Element {
 public:
  using Terms = std::map<Monomial, FieldValue, MonomialLess>;

  /// The zero element.
  Element(GraphPtr graph, FieldSpec field);

  static Element vertex(GraphPtr graph, FieldSpec field, VertexIndex v);
  static Element edge(GraphPtr graph, FieldSpec field, EdgeIndex e);
  static Element ghost(GraphPtr graph, FieldSpec field, EdgeIndex e);
  /// Sum of all vertices, the identity of L_K(E) for finite E.
  static Element identity(GraphPtr graph, FieldSpec field);
  /// c * p q*, normalized.
  static Element monomial(GraphPtr graph, FieldSpec field, const Monomial& m, const FieldValue& c);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const FieldSpec& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a normal monomial (zero when absent).
  FieldValue coefficient(const Monomial& m) const;

  /// Adds c * m, reducing m to normal form first. Throws AlgebraMismatch
  /// when m is not a valid monomial of the graph.
  void accumulate(const Monomial& m, const FieldValue& c);

  bool operator==(const Element& other) const;

 private:
  void add_normal(const Monomial& m, const FieldValue& c);

  GraphPtr graph_;
  FieldSpec field_;
  Terms terms_;
};

/// Throws AlgebraMismatch unless x and y live in the same algebra.
void require_same_algebra(const Element& x, const Element& y);

using RawCombination = std::vector<std::pair<FieldValue, Monomial>>;

/// Reduces a formal combination of monomials to normal form.
Element normalize(GraphPtr graph, FieldSpec field, const RawCombination& raw);

Element mul(const Element& x, const Element& y);
Element star(const Element& x);
Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);
Element scale(const FieldValue& c, const Element& x);
/// sum c_i x_i; the list must be non-empty.
Element linear_combine(const std::vector<std::pair<FieldValue, Element>>& terms);
bool eq(const Element& x, const Element& y);

/// Sum of the distinct vertices s(p), s(q) over x's monomials: u x = x u = x.
Element local_unit(const Element& x);

inline Element operator*(const Element& x, const Element& y) { return mul(x, y); }
inline Element operator+(const Element& x, const Element& y) { return add(x, y); }
inline Element operator-(const Element& x, const Element& y) { return sub(x, y); }
inline Element operator-(const Element& x) { return scale(x.field().from_int(-1), x); }

}  // namespace lpa
