#pragma once

// Seeded random generators for property tests and benchmarks.

#include <cstdint>
#include <random>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/rewrite.hpp"

namespace lpa {

using Rng = std::mt19937_64;

struct SampleOptions {
  std::size_t max_terms = 4;
  std::size_t max_length = 3;  // per path
  long long coeff_range = 3;   // numerators (and Gaussian parts) in [-r, r]
};

/// Uniform over finite fields; small numerators and denominators otherwise.
FieldValue random_scalar(const FieldSpec& k, Rng& rng, long long range = 3);

/// p q* from a forward walk p and a backward walk q from r(p). Requires a
/// non-empty graph.
Monomial random_monomial(const Graph& g, Rng& rng, std::size_t max_length);

/// Possibly zero.
Element random_element(const GraphPtr& g, const FieldSpec& k, Rng& rng, const SampleOptions& opt = {});
Element random_nonzero_element(const GraphPtr& g, const FieldSpec& k, Rng& rng, const SampleOptions& opt = {});

/// A word of 1..max_letters generators, mostly chained so neighbours meet at
/// a common vertex.
Word random_word(const Graph& g, Rng& rng, std::size_t max_letters);
RawTerm random_raw_term(const Graph& g, const FieldSpec& k, Rng& rng, std::size_t max_letters = 6);

}  // namespace lpa
