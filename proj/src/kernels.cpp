#include "lpa/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lpa::kernels {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kChunk = u64{1} << 15;
constexpr u64 kNone = std::numeric_limits<u64>::max();

// Decodes `index` into `digits` base-q digits, most significant first.
void decode(u64 index, u64 q, std::size_t digits, u64* out) {
  for (std::size_t i = digits; i-- > 0;) {
    out[i] = index % q;
    index /= q;
  }
}

bool matrix_annihilated(const FiniteArith& f, const u64* a, std::size_t n) {
  // (A* A)_{ij} = sum_k conj(a_ki) a_kj
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      u64 s = 0;
      for (std::size_t k = 0; k < n; ++k) s = f.add(s, f.mul(f.conj(a[k * n + i]), a[k * n + j]));
      if (s != 0) return false;
    }
  return true;
}

bool tuple_isotropic(const FiniteArith& f, const u64* x, std::size_t n) {
  u64 s = 0;
  for (std::size_t i = 0; i < n; ++i) s = f.add(s, f.mul(f.conj(x[i]), x[i]));
  return s == 0;
}

constexpr std::size_t kMaxDim = 16;

}  // namespace

FiniteArith::FiniteArith(const FieldSpec& field)
    : p_(field.characteristic()),
      order_(field.order()),
      quadratic_(field.kind() == FieldKind::quadratic),
      frobenius_(field.involution() == Involution::frobenius),
      alpha_(field.alpha()),
      beta_(field.beta()) {}

u64 FiniteArith::add(u64 x, u64 y) const {
  if (!quadratic_) return (x + y) % p_;
  u64 a = (x % p_ + y % p_) % p_;
  u64 b = (x / p_ + y / p_) % p_;
  return a + b * p_;
}

u64 FiniteArith::mul(u64 x, u64 y) const {
  if (!quadratic_) return static_cast<u64>(static_cast<u128>(x) * y % p_);
  const u128 a = x % p_, b = x / p_, c = y % p_, d = y / p_;
  const u128 bd = b * d % p_;
  const u64 c0 = static_cast<u64>((a * c % p_ + bd * beta_ % p_) % p_);
  const u64 c1 = static_cast<u64>((a * d % p_ + b * c % p_ + bd * alpha_ % p_) % p_);
  return c0 + c1 * p_;
}

u64 FiniteArith::conj(u64 x) const {
  if (!frobenius_) return x;
  u64 a = x % p_, b = x / p_;
  return (a + b * alpha_) % p_ + ((p_ - b) % p_) * p_;
}

u64 search_space(u64 q, std::size_t digits) {
  u128 total = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    total *= q;
    if (total > (u128{1} << 40)) throw std::length_error("exhaustive search space too large");
  }
  return static_cast<u64>(total);
}

std::vector<u64> decode_matrix(u64 index, u64 q, std::size_t n) {
  std::vector<u64> out(n * n);
  decode(index, q, n * n, out.data());
  return out;
}

std::vector<u64> decode_tuple(u64 index, u64 q, std::size_t n) {
  std::vector<u64> out(n, 0);
  out[0] = 1;
  decode(index, q, n - 1, out.data() + 1);
  return out;
}

SearchResult find_annihilated_matrix(const FieldSpec& field, std::size_t n) {
  if (n < 1 || n > kMaxDim / 4) throw std::invalid_argument("matrix size out of range");
  const FiniteArith f(field);
  const u64 total = search_space(f.order(), n * n);
  SearchResult result;
  for (u64 lo = 1; lo < total; lo += kChunk) {
    const u64 hi = std::min(total, lo + kChunk);
    u64 best = kNone;
#pragma omp parallel for reduction(min : best) schedule(static)
    for (u64 idx = lo; idx < hi; ++idx) {
      u64 a[kMaxDim];
      decode(idx, f.order(), n * n, a);
      if (matrix_annihilated(f, a, n)) best = std::min(best, idx);
    }
    if (best != kNone) {
      result.first = best;
      result.examined = best;
      return result;
    }
    result.examined = hi - 1;
  }
  return result;
}

SearchResult find_improper_tuple(const FieldSpec& field, std::size_t n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("tuple size out of range");
  const FiniteArith f(field);
  const u64 total = search_space(f.order(), n - 1);
  SearchResult result;
  for (u64 lo = 0; lo < total; lo += kChunk) {
    const u64 hi = std::min(total, lo + kChunk);
    u64 best = kNone;
#pragma omp parallel for reduction(min : best) schedule(static)
    for (u64 idx = lo; idx < hi; ++idx) {
      u64 x[kMaxDim];
      x[0] = 1;
      decode(idx, f.order(), n - 1, x + 1);
      if (tuple_isotropic(f, x, n)) best = std::min(best, idx);
    }
    if (best != kNone) {
      result.first = best;
      result.examined = best + 1;
      return result;
    }
    result.examined = hi;
  }
  return result;
}

namespace serial {

SearchResult find_annihilated_matrix(const FieldSpec& field, std::size_t n) {
  if (n < 1 || n > kMaxDim / 4) throw std::invalid_argument("matrix size out of range");
  const FiniteArith f(field);
  const u64 total = search_space(f.order(), n * n);
  SearchResult result;
  u64 a[kMaxDim];
  for (u64 idx = 1; idx < total; ++idx) {
    decode(idx, f.order(), n * n, a);
    if (matrix_annihilated(f, a, n)) {
      result.first = idx;
      result.examined = idx;
      return result;
    }
  }
  result.examined = total - 1;
  return result;
}

SearchResult find_improper_tuple(const FieldSpec& field, std::size_t n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("tuple size out of range");
  const FiniteArith f(field);
  const u64 total = search_space(f.order(), n - 1);
  SearchResult result;
  u64 x[kMaxDim];
  x[0] = 1;
  for (u64 idx = 0; idx < total; ++idx) {
    decode(idx, f.order(), n - 1, x + 1);
    if (tuple_isotropic(f, x, n)) {
      result.first = idx;
      result.examined = idx + 1;
      return result;
    }
  }
  result.examined = total;
  return result;
}

}  // namespace serial

}  // namespace lpa::kernels
