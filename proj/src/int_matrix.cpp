#include "glconj/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace glconj {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ == 0 ? 0 : init.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw ShapeError("ragged matrix initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t n) {
  IntMatrix m(n, n);
  for (auto& e : m.data_) e = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Integer> IntMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

std::vector<Integer> IntMatrix::col_vector(std::size_t j) const {
  std::vector<Integer> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : data_)
    if (sgn(e) != 0) return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

Integer IntMatrix::trace() const {
  if (!square()) throw ShapeError("trace of non-square matrix");
  Integer t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Integer IntMatrix::content() const {
  Integer g = 0;
  for (const auto& e : data_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  Integer* d = data_.data() + dst * cols_;
  const Integer* s = data_.data() + src * cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (sgn(s[j]) != 0) mpz_addmul(d[j].get_mpz_t(), factor.get_mpz_t(), s[j].get_mpz_t());
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, src);
    if (sgn(s) != 0)
      mpz_addmul((*this)(i, dst).get_mpz_t(), factor.get_mpz_t(), s.get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (auto& e : row(i)) e = -e;
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }

IntMatrix operator-(IntMatrix a) {
  for (auto& e : a.entries()) e = -e;
  return a;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("shape mismatch in *");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      auto bk = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(bk[j]) != 0) mpz_addmul(ci[j].get_mpz_t(), aik.get_mpz_t(), bk[j].get_mpz_t());
    }
  }
  return c;
}

IntMatrix operator*(const Integer& s, IntMatrix a) { return a *= s; }

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> v) {
  if (a.cols() != v.size()) throw ShapeError("shape mismatch in matrix-vector *");
  std::vector<Integer> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::vector<Integer> flatten(const IntMatrix& a) { return a.entries(); }

IntMatrix unflatten(std::span<const Integer> v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw ShapeError("unflatten: length mismatch");
  IntMatrix m(rows, cols);
  for (std::size_t k = 0; k < v.size(); ++k) m.entries()[k] = v[k];
  return m;
}

IntMatrix mod_reduce(const IntMatrix& a, const Integer& m) {
  IntMatrix r = a;
  for (auto& e : r.entries()) mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::string to_string(const IntMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace glconj
