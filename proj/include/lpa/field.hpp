#pragma once

// Exact coefficient fields with a designated involution.
//
//   Q          rationals, identity involution
//   Q[i]/id    Gaussian rationals, identity involution
//   Q[i]/conj  Gaussian rationals, complex conjugation
//   GF(p)      prime field, identity involution
//   GF(p,2)    quadratic extension F_p[t]/(t^2 - alpha t - beta), Frobenius x -> x^p
//
// For odd p the extension uses t^2 = beta with beta the smallest quadratic
// non-residue mod p; for p = 2 it uses t^2 = t + 1.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace lpa {

enum class FieldKind { rationals, gaussian, prime, quadratic };
enum class Involution { identity, conjugation, frobenius };

struct GaussianValue {
  mpq_class re;
  mpq_class im;

  bool operator==(const GaussianValue& o) const { return re == o.re && im == o.im; }
};

struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;

  bool operator==(const Residue&) const = default;
};

/// a + b t in GF(p^2).
struct QuadResidue {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t modulus = 0;

  bool operator==(const QuadResidue&) const = default;
};

using FieldValue = std::variant<mpq_class, GaussianValue, Residue, QuadResidue>;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public FieldError {
 public:
  DivisionByZero() : FieldError("division by zero") {}
};

class FieldMismatch : public FieldError {
 public:
  using FieldError::FieldError;
};

bool is_prime(std::uint64_t n);

class FieldSpec {
 public:
  /// Defaults to the rationals.
  FieldSpec() = default;

  static FieldSpec rationals();
  static FieldSpec gaussian(Involution involution);
  /// Throws FieldError unless p is prime.
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec quadratic(std::uint64_t p);

  /// "Q", "Q[i]/id", "Q[i]/conj", "GF(p)", "GF(p,2)".
  static FieldSpec parse(std::string_view text);
  std::string name() const;

  FieldKind kind() const { return kind_; }
  Involution involution() const { return involution_; }
  /// 0 for characteristic zero.
  std::uint64_t characteristic() const { return p_; }
  bool is_finite() const { return kind_ == FieldKind::prime || kind_ == FieldKind::quadratic; }
  /// Number of elements; finite fields only.
  std::uint64_t order() const;

  // t^2 = alpha t + beta in GF(p,2)
  std::uint64_t alpha() const { return alpha_; }
  std::uint64_t beta() const { return beta_; }

  FieldValue zero() const;
  FieldValue one() const;
  FieldValue from_int(long long n) const;
  /// i for Q[i], t for GF(p,2). Throws FieldError for other fields.
  FieldValue generator() const;

  /// Throws FieldMismatch when v does not belong to this field.
  void check(const FieldValue& v) const;
  bool contains(const FieldValue& v) const;

  FieldValue add(const FieldValue& x, const FieldValue& y) const;
  FieldValue sub(const FieldValue& x, const FieldValue& y) const;
  FieldValue neg(const FieldValue& x) const;
  FieldValue mul(const FieldValue& x, const FieldValue& y) const;
  /// Throws DivisionByZero for x = 0.
  FieldValue inv(const FieldValue& x) const;
  FieldValue div(const FieldValue& x, const FieldValue& y) const { return mul(x, inv(y)); }
  bool eq(const FieldValue& x, const FieldValue& y) const;
  bool is_zero(const FieldValue& x) const;
  bool is_one(const FieldValue& x) const;
  FieldValue pow(const FieldValue& x, std::uint64_t e) const;

  /// The field involution.
  FieldValue conj(const FieldValue& x) const;

  /// Literals: "a/b" (Q); "a/b+c/di", "i", "-2i" (Q[i]); "k" (GF(p));
  /// "a+bt", "t" (GF(p,2)). Surrounding parentheses are accepted.
  FieldValue parse_value(std::string_view text) const;
  std::string format(const FieldValue& x) const;
  /// True when the printed form has a leading minus and no inner sign, so an
  /// expression printer can pull the sign out ("- 2*e1").
  bool prints_negative(const FieldValue& x) const;

  /// Finite fields: the element with index i, where index(a + b t) = a + b p.
  FieldValue element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldValue& x) const;

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && involution_ == o.involution_ && p_ == o.p_;
  }

 private:
  FieldKind kind_ = FieldKind::rationals;
  Involution involution_ = Involution::identity;
  std::uint64_t p_ = 0;
  std::uint64_t alpha_ = 0;
  std::uint64_t beta_ = 0;
};

}  // namespace lpa
