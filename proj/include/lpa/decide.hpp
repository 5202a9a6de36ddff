#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/extended_nat.hpp"

namespace lpa {

enum class ProperStatus { proper, improper, unknown };

std::string to_string(ProperStatus s);

struct ProperAlgebra {
  ProperStatus status = ProperStatus::unknown;
  std::optional<Element> certificate;  // set for improper: a != 0, a* a = 0

  bool operator==(const ProperAlgebra&) const = default;
};

struct DecisionReport {
  std::string field;
  bool acyclic = false;
  std::vector<std::pair<std::string, ExtendedNat>> mu_table;  // vertex id order
  ExtendedNat sigma;
  ExtendedNat properness_level;
  bool regular = false;
  bool star_regular = false;
  bool positive_definite_algebra = false;
  ProperAlgebra proper_algebra;

  bool operator==(const DecisionReport&) const = default;
};

/// True iff g is acyclic.
bool is_regular(const Graph& g);

/// acyclic and sigma <= properness_level(k).
bool is_star_regular(const Graph& g, const FieldSpec& k);

/// properness_level(k) = omega. Throws std::invalid_argument for the empty graph.
bool is_positive_definite_algebra(const Graph& g, const FieldSpec& k);

/// proper when k is positive definite; for acyclic graphs proper iff
/// sigma <= level, otherwise improper with a certificate; unknown for cyclic
/// graphs over fields that are not positive definite.
ProperAlgebra proper_algebra(const GraphPtr& g, const FieldSpec& k);

DecisionReport full_report(const GraphPtr& g, const FieldSpec& k);

namespace kernels {

/// Reports for every (graph, field) pair, graph-major. Parallel over pairs.
std::vector<DecisionReport> decide_grid(const std::vector<GraphPtr>& graphs, const std::vector<FieldSpec>& fields);

namespace serial {
std::vector<DecisionReport> decide_grid(const std::vector<GraphPtr>& graphs, const std::vector<FieldSpec>& fields);
}

}  // namespace kernels

}  // namespace lpa
