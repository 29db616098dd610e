#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glconj/bqf.hpp"
#include "glconj/int_matrix.hpp"
#include "glconj/spectral.hpp"

namespace glconj {

class DetNotOne : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

/// Z-basis of C(X, Y) = {T : T X = Y T}.
///
/// T X = Y T is the transpose of A X = Y A read with the roles of the two
/// modules exchanged: T itself conjugates, T X T^{-1} = Y.
struct IntertwinerLattice {
  std::size_t n = 0;
  IntMatrix X, Y;
  std::vector<IntMatrix> basis;

  std::size_t rank() const { return basis.size(); }
  IntMatrix combination(const std::vector<Integer>& coeffs) const;
};

enum class IntertwinerMethod {
  Automatic,
  /// Integer kernel of the n^2 x n^2 system T -> T X - Y T.
  Kronecker,
  /// Outer products of saturated eigenvector bases of Y and left eigenvector
  /// bases of X, saturated at the primes dividing the q_i of X. X must split.
  Eigenspace,
};

IntertwinerLattice intertwiner_lattice(const IntMatrix& x, const IntMatrix& y,
                                       IntertwinerMethod method = IntertwinerMethod::Automatic);

/// Global: T X = Y T and det T = +-1. Local (prime given): T X = Y T and
/// p does not divide det T.
bool verify_conjugator(const IntMatrix& t, const IntMatrix& x, const IntMatrix& y,
                       std::optional<std::uint64_t> prime = std::nullopt);

/// Prime divisors of prod_{i<j} (a_i - a_j), ascending.
std::vector<std::uint64_t> relevant_primes(const SplitSpectrum& spectrum);

enum class LocalStatus { Pass, Fail, Undecided };
enum class LocalMethod { Sampled, Exhaustive, Supplied };

std::string to_string(LocalStatus s);
std::string to_string(LocalMethod m);

struct LocalVerdict {
  std::uint64_t prime = 0;
  LocalStatus status = LocalStatus::Undecided;
  std::optional<IntMatrix> certificate;
  LocalMethod method = LocalMethod::Sampled;
  std::uint64_t trials = 0;
};

/// Exhaustive enumeration of C(X, Y) / p is used iff p^rank <= 2^20.
LocalVerdict local_test(const IntertwinerLattice& lattice, std::uint64_t p,
                        std::uint64_t budget = 100000, std::uint64_t seed = 0);
LocalVerdict local_test(const IntMatrix& x, const IntMatrix& y, std::uint64_t p,
                        std::uint64_t budget = 100000, std::uint64_t seed = 0);

/// Wraps an externally supplied local conjugator after checking it.
LocalVerdict supplied_local(const IntMatrix& t, const IntMatrix& x, const IntMatrix& y,
                            std::uint64_t p);

/// Symmetric 0/1 with zero diagonal.
bool is_adjacency_matrix(const IntMatrix& a);

/// Permutation matrix T with T X T^{-1} = Y by backtracking over vertex maps.
std::optional<IntMatrix> permutation_conjugator(const IntMatrix& x, const IntMatrix& y,
                                                std::uint64_t node_budget = 1000000);

/// Unimodular element of the lattice, if one is found within the budget.
std::optional<IntMatrix> conjugator_search(const IntertwinerLattice& lattice,
                                           std::uint64_t budget = 1000000, std::uint64_t seed = 0);

/// A in SL_n(Z) with A = M mod q.
IntMatrix sl_lift(const IntMatrix& m, const Integer& q);

/// det(x B_1 + y B_2) for a rank-2 lattice of 2x2 matrices.
BinaryQuadraticForm bqf_from_lattice(const IntertwinerLattice& lattice);

enum class VerdictStatus { Conjugate, NotConjugate, Unknown };
enum class VerdictReason {
  ExplicitConjugator,
  TheoremLocalPasses,
  CharpolyMismatch,
  LocalObstruction,
  BqfCertificate,
  AssumptionUnverified,
};

std::string to_string(VerdictStatus s);
std::string to_string(VerdictReason r);

struct BqfCertificate {
  BinaryQuadraticForm form;
  UnitRepresentation representation;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  VerdictReason reason = VerdictReason::AssumptionUnverified;
  std::optional<IntMatrix> conjugator;
  std::vector<LocalVerdict> local;
  std::optional<AssumptionReport> assumption;
  char assumption_subject = 'X';
  std::optional<BqfCertificate> bqf;
  /// Minimal polynomial outside the supported class (and n != 2).
  bool unsupported = false;
  std::string detail;
};

struct DecideOptions {
  std::uint64_t local_budget = 100000;
  std::uint64_t search_budget = 1000000;
  std::uint64_t seed = 0;
  /// Explicit conjugators are also searched for on the theorem route up to
  /// this size.
  std::size_t explicit_up_to = 12;
};

Verdict decide(const IntMatrix& x, const IntMatrix& y, const DecideOptions& options = {});

}  // namespace glconj
