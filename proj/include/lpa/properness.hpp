#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lpa/extended_nat.hpp"
#include "lpa/field.hpp"

namespace lpa {

/// Largest n such that sum_{i<=n} conj(x_i) x_i = 0 forces every x_i = 0;
/// omega when the involution is positive definite.
///
///   Q, Q[i]/conj     omega
///   Q[i]/id          1      (1^2 + i^2 = 0)
///   GF(p)            2 when p = 3 mod 4, else 1
///   GF(p,2)          1      (the norm map is onto GF(p))
ExtendedNat properness_level(const FieldSpec& field);

/// A not-all-zero tuple (x_1, ..., x_n) with sum conj(x_i) x_i = 0, or
/// nullopt when none exists (exactly when n <= properness_level).
///
/// Finite fields are searched exhaustively with x_1 = 1 and the remaining
/// coordinates in lexicographic order; Q[i]/id returns (1, i, 0, ..., 0).
std::optional<std::vector<FieldValue>> improper_tuple(const FieldSpec& field, std::size_t n);

}  // namespace lpa
