#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lpa {

/// A non-negative integer or omega, where omega exceeds every integer.
///
/// Holds path counts mu(v), the supremum sigma and properness levels.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(std::uint64_t value) : value_(value) {}  // NOLINT(implicit)

  static constexpr ExtendedNat omega() {
    ExtendedNat n;
    n.omega_ = true;
    return n;
  }

  constexpr bool is_omega() const { return omega_; }
  constexpr bool is_finite() const { return !omega_; }

  /// Throws std::logic_error for omega.
  std::uint64_t value() const;

  std::string to_string() const;

  /// Accepts a decimal integer or "omega".
  static ExtendedNat parse(const std::string& text);

  constexpr bool operator==(const ExtendedNat& other) const {
    return omega_ == other.omega_ && (omega_ || value_ == other.value_);
  }
  constexpr std::strong_ordering operator<=>(const ExtendedNat& other) const {
    if (omega_ || other.omega_) return omega_ <=> other.omega_;
    return value_ <=> other.value_;
  }

 private:
  std::uint64_t value_ = 0;
  bool omega_ = false;
};

}  // namespace lpa
