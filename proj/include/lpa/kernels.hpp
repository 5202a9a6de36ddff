#pragma once

// Exhaustive searches over finite fields. The lpa::kernels functions are
// OpenMP-parallel; lpa::kernels::serial keeps straightforward single-thread
// versions that the tests compare against. Both report the smallest index
// hit, so their results are identical.

#include <cstdint>
#include <optional>
#include <vector>

#include "lpa/field.hpp"

namespace lpa::kernels {

/// Arithmetic on packed element indices of GF(p) or GF(p,2)
/// (index(a + b t) = a + b p, matching FieldSpec::element_at).
class FiniteArith {
 public:
  explicit FiniteArith(const FieldSpec& field);

  std::uint64_t order() const { return order_; }
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t conj(std::uint64_t x) const;

 private:
  std::uint64_t p_;
  std::uint64_t order_;
  bool quadratic_;
  bool frobenius_;
  std::uint64_t alpha_;
  std::uint64_t beta_;
};

struct SearchResult {
  std::uint64_t examined = 0;
  std::optional<std::uint64_t> first;
};

/// q^digits, throwing std::length_error beyond 2^40 candidates.
std::uint64_t search_space(std::uint64_t q, std::size_t digits);

/// Row-major n x n entries of matrix `index` (entry (0,0) most significant).
std::vector<std::uint64_t> decode_matrix(std::uint64_t index, std::uint64_t q, std::size_t n);
/// (1, x_2, ..., x_n) for tuple `index` (x_2 most significant).
std::vector<std::uint64_t> decode_tuple(std::uint64_t index, std::uint64_t q, std::size_t n);

/// First nonzero n x n matrix A over the field with A* A = 0 under the
/// conjugate-transpose involution. `examined` counts matrices inspected.
SearchResult find_annihilated_matrix(const FieldSpec& field, std::size_t n);

/// First tuple (1, x_2, ..., x_n) with sum conj(x_i) x_i = 0.
SearchResult find_improper_tuple(const FieldSpec& field, std::size_t n);

namespace serial {
SearchResult find_annihilated_matrix(const FieldSpec& field, std::size_t n);
SearchResult find_improper_tuple(const FieldSpec& field, std::size_t n);
}  // namespace serial

}  // namespace lpa::kernels
