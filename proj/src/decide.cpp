#include "lpa/decide.hpp"

#include <exception>
#include <stdexcept>

#include "lpa/properness.hpp"
#include "lpa/witness.hpp"

namespace lpa {

std::string to_string(ProperStatus s) {
  switch (s) {
    case ProperStatus::proper: return "proper";
    case ProperStatus::improper: return "improper";
    case ProperStatus::unknown: return "unknown";
  }
  return "unknown";
}

bool is_regular(const Graph& g) { return is_acyclic(g); }

bool is_star_regular(const Graph& g, const FieldSpec& k) {
  return is_acyclic(g) && sigma(g) <= properness_level(k);
}

bool is_positive_definite_algebra(const Graph& g, const FieldSpec& k) {
  if (g.empty()) throw std::invalid_argument("positive definiteness is defined for graphs with vertices");
  return properness_level(k).is_omega();
}

ProperAlgebra proper_algebra(const GraphPtr& g, const FieldSpec& k) {
  const ExtendedNat level = properness_level(k);
  if (level.is_omega()) return {ProperStatus::proper, std::nullopt};
  if (!is_acyclic(*g)) return {ProperStatus::unknown, std::nullopt};
  if (sigma(*g) <= level) return {ProperStatus::proper, std::nullopt};
  return {ProperStatus::improper, improper_element(g, k)};
}

DecisionReport full_report(const GraphPtr& g, const FieldSpec& k) {
  DecisionReport r;
  r.field = k.name();
  r.acyclic = is_acyclic(*g);
  auto table = mu_table(*g);
  for (VertexIndex v = 0; v < g->vertex_count(); ++v) r.mu_table.emplace_back(g->vertex_name(v), table[v]);
  r.sigma = sigma(*g);
  r.properness_level = properness_level(k);
  r.regular = r.acyclic;
  r.star_regular = r.acyclic && r.sigma <= r.properness_level;
  r.positive_definite_algebra = r.properness_level.is_omega();
  r.proper_algebra = proper_algebra(g, k);
  return r;
}

namespace kernels {

std::vector<DecisionReport> decide_grid(const std::vector<GraphPtr>& graphs, const std::vector<FieldSpec>& fields) {
  const std::size_t total = graphs.size() * fields.size();
  std::vector<std::optional<DecisionReport>> slots(total);
  std::vector<std::exception_ptr> errors(total);
  const long long n = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      slots[idx] = full_report(graphs[idx / fields.size()], fields[idx % fields.size()]);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  std::vector<DecisionReport> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

namespace serial {

std::vector<DecisionReport> decide_grid(const std::vector<GraphPtr>& graphs, const std::vector<FieldSpec>& fields) {
  std::vector<DecisionReport> out;
  for (const auto& g : graphs)
    for (const auto& k : fields) out.push_back(full_report(g, k));
  return out;
}

}  // namespace serial
}  // namespace kernels

}  // namespace lpa
