#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace glconj {

using Integer = mpz_class;

inline int cmpabs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static IntMatrix all_ones(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> d);
  /// Builds a matrix whose rows are the given vectors (all of equal length).
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Integer> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<Integer> row_vector(std::size_t i) const;
  std::vector<Integer> col_vector(std::size_t j) const;

  const std::vector<Integer>& entries() const { return data_; }
  std::vector<Integer>& entries() { return data_; }

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;
  Integer trace() const;
  /// gcd of all entries (0 for the zero matrix).
  Integer content() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  IntMatrix& operator*=(const Integer& s);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& s, IntMatrix a);
std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> v);

/// Row-major flattening; vec(T) used for intertwiner lattices.
std::vector<Integer> flatten(const IntMatrix& a);
IntMatrix unflatten(std::span<const Integer> v, std::size_t rows, std::size_t cols);

/// Entrywise reduction into [0, m).
IntMatrix mod_reduce(const IntMatrix& a, const Integer& m);

std::string to_string(const IntMatrix& a);

}  // namespace glconj
