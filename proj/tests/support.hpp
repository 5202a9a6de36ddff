#pragma once

// Shared corpus and brute-force oracles for the test binaries. The oracles
// deliberately avoid the library routine they check: path counts come from
// explicit walks, properness from exhaustive tuple and matrix loops written
// directly against FieldSpec arithmetic.

#include <functional>
#include <string>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"

namespace lpa::test {

struct NamedGraph {
  std::string name;
  GraphPtr graph;
};

GraphPtr line(std::size_t n);
GraphPtr rose(std::size_t n);
GraphPtr toeplitz();
GraphPtr clock(std::size_t n, std::size_t m);
GraphPtr single_vertex();
GraphPtr empty_graph();
GraphPtr from_text(const std::string& text);

/// line_1..line_5, line_2 + isolated vertex, line_3 + line_2, binary
/// in-tree, rose_1, rose_2, toeplitz, clock(3,2).
const std::vector<NamedGraph>& corpus();
std::vector<NamedGraph> acyclic_corpus();

/// Q, Q[i]/id, Q[i]/conj, GF(3), GF(3,2).
const std::vector<FieldSpec>& five_fields();

// Oracles --------------------------------------------------------------

/// Paths ending at each vertex by explicit backward walks; omega once a walk
/// of length |E^0| exists.
std::vector<ExtendedNat> walk_mu(const Graph& g);
bool walk_acyclic(const Graph& g);

/// Largest n <= max_n with no nonzero tuple of length n satisfying
/// sum conj(x_i) x_i = 0; max_n + 1 stands for "none found up to max_n".
std::size_t brute_level(const FieldSpec& k, std::size_t max_n);

/// Whether some nonzero n x n matrix over the finite field satisfies
/// A* A = 0, by enumeration with Matrix arithmetic.
bool brute_has_annihilated_matrix(const FieldSpec& k, std::size_t n);

/// Calls f for every element of a finite field.
void for_each_element(const FieldSpec& k, const std::function<void(const FieldValue&)>& f);

}  // namespace lpa::test
