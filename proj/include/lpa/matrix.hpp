#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/field.hpp"

namespace lpa {

/// Dense matrix over an exact field.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix zero(FieldSpec field, std::size_t rows, std::size_t cols) { return Matrix(field, rows, cols); }
  static Matrix unit(FieldSpec field, std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const FieldValue& at(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, FieldValue v);

  bool is_zero() const;
  Matrix conj_transpose() const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  bool operator==(const Matrix& other) const;

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldValue> data_;
};

/// A = P D Q with P, Q invertible and D a 0/1 diagonal of rank `rank`
/// (ones in the leading positions). Inverses are stored alongside and were
/// checked by multiplication when the factorization was built.
struct RankFactorization {
  Matrix p;
  Matrix p_inv;
  Matrix d;
  Matrix q;
  Matrix q_inv;
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination with full pivoting; the pivot is the first
/// nonzero entry of the remaining block in row-major order. Square only.
RankFactorization rank_factorization(const Matrix& a);

enum class Side { left, right };

/// X with X A = B (left) or A X = B (right); nullopt when inconsistent.
/// Free parameters are set to zero.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b, Side side);

}  // namespace lpa
