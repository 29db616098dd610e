#pragma once

#include <string>
#include <vector>

#include "glconj/int_matrix.hpp"

namespace glconj {

/// Dense integer polynomial, coefficients from the constant term upward.
/// The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  /// The monic linear polynomial t - root.
  static IntPolynomial linear_root(const Integer& root);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Integer& leading() const { return coeffs_.back(); }

  Integer evaluate(const Integer& x) const;
  /// X^0 c_0 + X c_1 + ... for a square matrix X.
  IntMatrix evaluate(const IntMatrix& x) const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form in the variable t, highest degree first.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Monic polynomial of least degree annihilating X (Krylov dependency over Q).
IntPolynomial minimal_polynomial(const IntMatrix& x);

/// det(t I - X), computed by Hessenberg reduction modulo enough word-size
/// primes to cover the coefficient bound, then Chinese remaindering.
IntPolynomial characteristic_polynomial(const IntMatrix& x);

/// Distinct integer roots in ascending order. `bound` limits the search
/// interval [-bound, bound]; it must dominate every integer root.
std::vector<Integer> integer_roots(const IntPolynomial& f, const Integer& bound);

/// Largest absolute row sum; bounds every eigenvalue of X in absolute value.
Integer spectral_bound(const IntMatrix& x);

}  // namespace glconj
