#pragma once

#include <optional>
#include <vector>

#include "glconj/int_matrix.hpp"
#include "glconj/polynomial.hpp"

namespace glconj {

/// The minimal polynomial has a repeated or non-integer root.
class NotSplit : public Error {
 public:
  using Error::Error;
};

/// Some abelian invariant of an idempotent does not divide its denominator.
class DivisibilityViolation : public Error {
 public:
  using Error::Error;
};

/// Spectral data of a diagonalizable integer matrix with distinct integer
/// eigenvalues a_1 < ... < a_k.
///
/// For each eigenvalue, e_i = prod_{j != i} (X - a_j) / (a_i - a_j) is the
/// rational spectral projector, q_i the least positive integer with q_i e_i
/// integral and E_i = q_i e_i. Only the integral data is kept.
struct SplitSpectrum {
  std::size_t n = 0;
  std::vector<Integer> eigenvalues;
  std::vector<std::size_t> multiplicities;
  std::vector<IntMatrix> E;
  std::vector<Integer> q;

  std::size_t size() const { return eigenvalues.size(); }
  IntPolynomial minimal_polynomial() const;
};

/// Throws NotSplit if X is outside the class (non-integer or repeated roots
/// of the minimal polynomial).
SplitSpectrum split_spectrum(const IntMatrix& x);

struct IdempotentReport {
  Integer eigenvalue;
  Integer q;
  Integer smith_exponent;
  std::size_t rank = 0;
};

/// Smith-group conditions on the scaled idempotents:
/// (a) every E_i has Smith exponent q_i;
/// (b) some e_i has rank one and every other E_j has Smith exponent q_j.
struct AssumptionReport {
  bool clause_a = false;
  bool clause_b = false;
  std::vector<IdempotentReport> per_index;
  /// Index (into per_index) of the rank-one idempotent that plays the role of
  /// e_1 for clause (b).
  std::optional<std::size_t> witness_index_for_b;

  bool holds() const { return clause_a || clause_b; }
};

AssumptionReport check_assumption(const SplitSpectrum& spectrum);
AssumptionReport check_assumption(const IntMatrix& x);

/// m_j = q / d_j for the abelian invariants d_j of E; these are the invariants
/// of the quotient of the eigenlattice by the part of the module lattice it
/// contains.
std::vector<Integer> quotient_invariants(const IntMatrix& e, const Integer& q);

/// X * E_i == a_i * E_i, E_i^2 == q_i E_i, E_i E_j == 0 and sum E_i / q_i == I.
bool verify_idempotent_identities(const IntMatrix& x, const SplitSpectrum& s);

}  // namespace glconj
