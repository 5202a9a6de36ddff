#pragma once

// For a finite acyclic graph, L_K(E) decomposes as the direct sum over sinks
// v of the ideals I_v spanned by alpha_i alpha_j* (paths alpha ending at v),
// and I_v is a full matrix algebra of size mu(v). phi sends
// sum k_ij alpha_i alpha_j* to the block (k_ij), rows indexed by alpha_i.

#include <map>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/matrix.hpp"

namespace lpa {

struct SinkBlockBasis {
  VertexIndex sink;
  std::vector<Path> paths;  // enumerate_paths_to order
};

struct SinkBasis {
  std::vector<SinkBlockBasis> blocks;  // sinks in identifier order

  std::size_t total_paths() const;
};

/// Throws CyclicGraph for graphs with a cycle.
SinkBasis sink_basis(const Graph& g);

/// A combination of monomials alpha beta* whose paths all end at sinks.
/// Equal to the source element, but generally not in core normal form.
struct SinkForm {
  GraphPtr graph;
  FieldSpec field;
  std::map<Monomial, FieldValue, MonomialLess> terms;

  Element to_element() const;
};

/// Expands p q* = sum_{e in s^-1(r(p))} (p e)(q e)* until every monomial ends
/// at a sink. Throws CyclicGraph.
SinkForm sink_normal_form(const Element& x);

struct MatrixBlock {
  VertexIndex sink;
  Matrix matrix;

  bool operator==(const MatrixBlock&) const = default;
};

struct MatrixImage {
  FieldSpec field;
  std::vector<MatrixBlock> blocks;

  bool operator==(const MatrixImage&) const = default;

  MatrixImage operator*(const MatrixImage& o) const;
  MatrixImage operator+(const MatrixImage& o) const;
  MatrixImage conj_transpose() const;
};

MatrixImage phi(const Element& x);
/// Throws std::invalid_argument when block sinks or sizes disagree with the
/// sink basis of `graph`.
Element phi_inv(const GraphPtr& graph, const MatrixImage& m);

/// Image of the identity: identity blocks of size mu(v).
MatrixImage identity_image(const Graph& g, const FieldSpec& field);

/// sum over sinks of mu(v)^2. Throws CyclicGraph.
std::uint64_t dimension(const Graph& g);

}  // namespace lpa
