#include "lpa/matrix.hpp"

#include <stdexcept>

namespace lpa {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

Matrix Matrix::unit(FieldSpec field, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(field, n, n);
  m.set(i, j, field.one());
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, FieldValue v) {
  field_.check(v);
  data_.at(i * cols_ + j) = std::move(v);
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!field_.is_zero(v)) return false;
  return true;
}

Matrix Matrix::conj_transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, field_.conj(at(i, j)));
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_)) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldValue& a = at(i, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.data_[i * o.cols_ + j] = field_.add(out.data_[i * o.cols_ + j], field_.mul(a, o.at(k, j)));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw std::invalid_argument("matrix shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw std::invalid_argument("matrix shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], o.data_[i]);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += field_.format(at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

namespace {

// Elementary operations applied to the work matrix while keeping
// L A R = M together with L^-1 and R^-1.
struct Eliminator {
  const FieldSpec& k;
  std::size_t n;
  Matrix m, l, l_inv, r, r_inv;

  Eliminator(const Matrix& a)
      : k(a.field()), n(a.rows()), m(a), l(Matrix::identity(k, n)), l_inv(l), r(l), r_inv(l) {}

  static void swap_rows(Matrix& x, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      FieldValue t = x.at(i, c);
      x.set(i, c, x.at(j, c));
      x.set(j, c, std::move(t));
    }
  }
  static void swap_cols(Matrix& x, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < x.rows(); ++c) {
      FieldValue t = x.at(c, i);
      x.set(c, i, x.at(c, j));
      x.set(c, j, std::move(t));
    }
  }
  // row_i += c row_src
  void add_row(Matrix& x, std::size_t i, std::size_t src, const FieldValue& c) const {
    for (std::size_t col = 0; col < x.cols(); ++col)
      x.set(i, col, k.add(x.at(i, col), k.mul(c, x.at(src, col))));
  }
  // col_j += c col_src
  void add_col(Matrix& x, std::size_t j, std::size_t src, const FieldValue& c) const {
    for (std::size_t row = 0; row < x.rows(); ++row)
      x.set(row, j, k.add(x.at(row, j), k.mul(c, x.at(row, src))));
  }

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_rows(m, i, j);
    swap_rows(l, i, j);
    swap_cols(l_inv, i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_cols(m, i, j);
    swap_cols(r, i, j);
    swap_rows(r_inv, i, j);
  }
  void row_scale(std::size_t i, const FieldValue& s) {
    FieldValue s_inv = k.inv(s);
    for (std::size_t c = 0; c < n; ++c) {
      m.set(i, c, k.mul(s, m.at(i, c)));
      l.set(i, c, k.mul(s, l.at(i, c)));
      l_inv.set(c, i, k.mul(s_inv, l_inv.at(c, i)));
    }
  }
  void row_add(std::size_t i, std::size_t src, const FieldValue& c) {
    add_row(m, i, src, c);
    add_row(l, i, src, c);
    add_col(l_inv, src, i, k.neg(c));
  }
  void col_add(std::size_t j, std::size_t src, const FieldValue& c) {
    add_col(m, j, src, c);
    add_col(r, j, src, c);
    add_row(r_inv, src, j, k.neg(c));
  }
};

}  // namespace

RankFactorization rank_factorization(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("rank_factorization: square matrices only");
  const FieldSpec& k = a.field();
  const std::size_t n = a.rows();
  Eliminator el(a);
  std::size_t rank = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = step; i < n && !pivot; ++i)
      for (std::size_t j = step; j < n && !pivot; ++j)
        if (!k.is_zero(el.m.at(i, j))) pivot.emplace(i, j);
    if (!pivot) break;
    el.row_swap(step, pivot->first);
    el.col_swap(step, pivot->second);
    el.row_scale(step, k.inv(el.m.at(step, step)));
    for (std::size_t i = 0; i < n; ++i)
      if (i != step && !k.is_zero(el.m.at(i, step))) el.row_add(i, step, k.neg(el.m.at(i, step)));
    for (std::size_t j = step + 1; j < n; ++j)
      if (!k.is_zero(el.m.at(step, j))) el.col_add(j, step, k.neg(el.m.at(step, j)));
    ++rank;
  }

  RankFactorization f{el.l_inv, el.l, el.m, el.r_inv, el.r, rank};
  const Matrix id = Matrix::identity(k, n);
  if (!(f.p * f.p_inv == id) || !(f.q * f.q_inv == id) || !(f.p * f.d * f.q == a))
    throw std::logic_error("rank_factorization: self-check failed");
  return f;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b, Side side) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("solve_linear: A must be square");
  if (side == Side::right ? b.rows() != n : b.cols() != n)
    throw std::invalid_argument("solve_linear: shape mismatch");
  const FieldSpec& k = a.field();
  RankFactorization f = rank_factorization(a);

  if (side == Side::right) {
    // D (Q X) = P^-1 B
    Matrix c = f.p_inv * b;
    for (std::size_t i = f.rank; i < n; ++i)
      for (std::size_t j = 0; j < c.cols(); ++j)
        if (!k.is_zero(c.at(i, j))) return std::nullopt;
    return f.q_inv * c;
  }
  // (X P) D = B Q^-1
  Matrix c = b * f.q_inv;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = f.rank; j < n; ++j)
      if (!k.is_zero(c.at(i, j))) return std::nullopt;
  return c * f.p_inv;
}

}  // namespace lpa
