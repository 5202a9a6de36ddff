#include "lpa/semisimple.hpp"

#include <stdexcept>

namespace lpa {

namespace {

void require_acyclic(const Graph& g) {
  if (!is_acyclic(g)) throw CyclicGraph("graph has a cycle; no finite matrix image exists");
}

std::size_t index_in(const std::vector<Path>& paths, const Path& p) {
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (paths[i] == p) return i;
  throw std::logic_error("path missing from sink basis");
}

}  // namespace

std::size_t SinkBasis::total_paths() const {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.paths.size();
  return total;
}

SinkBasis sink_basis(const Graph& g) {
  require_acyclic(g);
  SinkBasis basis;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v)) basis.blocks.push_back({v, enumerate_paths_to(g, v)});
  return basis;
}

Element SinkForm::to_element() const {
  Element x(graph, field);
  for (const auto& [m, c] : terms) x.accumulate(m, c);
  return x;
}

SinkForm sink_normal_form(const Element& x) {
  const Graph& g = x.graph();
  require_acyclic(g);
  const FieldSpec& k = x.field();
  SinkForm out{x.graph_ptr(), k, {}};
  std::vector<std::pair<Monomial, FieldValue>> work(x.terms().begin(), x.terms().end());
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();
    VertexIndex end = path_range(g, m.p);
    if (g.is_sink(end)) {
      auto [it, inserted] = out.terms.try_emplace(m, c);
      if (!inserted) {
        it->second = k.add(it->second, c);
        if (k.is_zero(it->second)) out.terms.erase(it);
      }
      continue;
    }
    for (EdgeIndex e : g.out_edges(end)) {
      Monomial next = m;
      next.p.edges.push_back(e);
      next.q.edges.push_back(e);
      work.emplace_back(std::move(next), c);
    }
  }
  return out;
}

MatrixImage MatrixImage::operator*(const MatrixImage& o) const {
  if (blocks.size() != o.blocks.size()) throw std::invalid_argument("matrix image shape mismatch");
  MatrixImage out{field, {}};
  for (std::size_t i = 0; i < blocks.size(); ++i)
    out.blocks.push_back({blocks[i].sink, blocks[i].matrix * o.blocks[i].matrix});
  return out;
}

MatrixImage MatrixImage::operator+(const MatrixImage& o) const {
  if (blocks.size() != o.blocks.size()) throw std::invalid_argument("matrix image shape mismatch");
  MatrixImage out{field, {}};
  for (std::size_t i = 0; i < blocks.size(); ++i)
    out.blocks.push_back({blocks[i].sink, blocks[i].matrix + o.blocks[i].matrix});
  return out;
}

MatrixImage MatrixImage::conj_transpose() const {
  MatrixImage out{field, {}};
  for (const auto& b : blocks) out.blocks.push_back({b.sink, b.matrix.conj_transpose()});
  return out;
}

MatrixImage phi(const Element& x) {
  const Graph& g = x.graph();
  SinkBasis basis = sink_basis(g);
  SinkForm form = sink_normal_form(x);
  MatrixImage out{x.field(), {}};
  std::map<VertexIndex, std::size_t> block_of;
  for (const auto& b : basis.blocks) {
    block_of.emplace(b.sink, out.blocks.size());
    out.blocks.push_back({b.sink, Matrix(x.field(), b.paths.size(), b.paths.size())});
  }
  for (const auto& [m, c] : form.terms) {
    std::size_t bi = block_of.at(path_range(g, m.p));
    const auto& paths = basis.blocks[bi].paths;
    out.blocks[bi].matrix.set(index_in(paths, m.p), index_in(paths, m.q), c);
  }
  return out;
}

Element phi_inv(const GraphPtr& graph, const MatrixImage& m) {
  SinkBasis basis = sink_basis(*graph);
  if (basis.blocks.size() != m.blocks.size()) throw std::invalid_argument("phi_inv: block count mismatch");
  Element x(graph, m.field);
  for (std::size_t bi = 0; bi < basis.blocks.size(); ++bi) {
    const auto& paths = basis.blocks[bi].paths;
    const auto& block = m.blocks[bi];
    if (block.sink != basis.blocks[bi].sink || block.matrix.rows() != paths.size() ||
        block.matrix.cols() != paths.size())
      throw std::invalid_argument("phi_inv: block shape mismatch");
    for (std::size_t i = 0; i < paths.size(); ++i)
      for (std::size_t j = 0; j < paths.size(); ++j)
        if (!m.field.is_zero(block.matrix.at(i, j))) x.accumulate({paths[i], paths[j]}, block.matrix.at(i, j));
  }
  return x;
}

MatrixImage identity_image(const Graph& g, const FieldSpec& field) {
  MatrixImage out{field, {}};
  for (const auto& b : sink_basis(g).blocks) out.blocks.push_back({b.sink, Matrix::identity(field, b.paths.size())});
  return out;
}

std::uint64_t dimension(const Graph& g) {
  require_acyclic(g);
  auto table = mu_table(g);
  std::uint64_t total = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v)) total += table[v].value() * table[v].value();
  return total;
}

}  // namespace lpa
