#include "lpa/properness.hpp"

#include <stdexcept>

#include "lpa/kernels.hpp"

namespace lpa {

ExtendedNat properness_level(const FieldSpec& field) {
  switch (field.kind()) {
    case FieldKind::rationals: return ExtendedNat::omega();
    case FieldKind::gaussian:
      return field.involution() == Involution::conjugation ? ExtendedNat::omega() : ExtendedNat(1);
    case FieldKind::prime: return field.characteristic() % 4 == 3 ? ExtendedNat(2) : ExtendedNat(1);
    case FieldKind::quadratic: return ExtendedNat(1);
  }
  return ExtendedNat(1);
}

std::optional<std::vector<FieldValue>> improper_tuple(const FieldSpec& field, std::size_t n) {
  if (n < 1) throw std::invalid_argument("improper_tuple: n must be positive");
  if (field.is_finite()) {
    auto hit = kernels::find_improper_tuple(field, n);
    if (!hit.first) return std::nullopt;
    std::vector<FieldValue> tuple;
    for (auto idx : kernels::decode_tuple(*hit.first, field.order(), n))
      tuple.push_back(field.element_at(idx));
    return tuple;
  }
  if (field.kind() == FieldKind::gaussian && field.involution() == Involution::identity && n >= 2) {
    std::vector<FieldValue> tuple(n, field.zero());
    tuple[0] = field.one();
    tuple[1] = field.generator();
    return tuple;
  }
  // Q and Q[i]/conj: a vanishing sum of (Hermitian) squares forces zero.
  return std::nullopt;
}

}  // namespace lpa
