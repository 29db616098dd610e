#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glconj/int_matrix.hpp"

namespace glconj {

class DomainError : public Error {
 public:
  using Error::Error;
};

/// F_q for q = p^degree, built as F_p[x]/(m) with x primitive.
///
/// Elements are indexed 0..q-1 by their coefficient vectors: the element
/// c_0 + c_1 x + ... + c_{d-1} x^{d-1} has index sum c_i p^i, so index order
/// is lexicographic order on (c_{d-1}, ..., c_0) and 0 comes first.
class GaloisField {
 public:
  GaloisField(std::uint32_t p, std::uint32_t degree, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus, constant term first (length degree + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const { return sub(0, a); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// beta^e for the primitive element beta = x.
  std::uint32_t beta_power(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
  /// Discrete log base beta; a must be nonzero.
  std::uint32_t log(std::uint32_t a) const;
  std::uint32_t beta() const { return exp_[1 % (q_ - 1)]; }

  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t from_digits(const std::vector<std::uint32_t>& c) const;

  std::string modulus_string() const;

 private:
  std::uint32_t p_, degree_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Smallest monic primitive polynomial of the given degree over Z/p
/// (coefficients compared from degree-1 down to the constant term), so that
/// beta = x generates the multiplicative group. Requires p = 3 mod 4 and an
/// even degree.
GaloisField field_build(std::uint32_t p, std::uint32_t degree);

/// Brute-force irreducibility over Z/p (monic, constant term first).
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p);

bool is_prime_u32(std::uint32_t n);

/// U = <beta^4> and its cosets beta U, beta^2 U, beta^3 U.
std::array<std::vector<std::uint32_t>, 4> quarter_cosets(const GaloisField& f);

/// Edge iff the difference is a nonzero square.
IntMatrix paley_adjacency(const GaloisField& f);

/// Edge iff the difference lies in U or gU, where g = beta^generator_exponent
/// (the default uses beta itself). generator_exponent must be odd and
/// coprime to q - 1.
IntMatrix peisert_adjacency(const GaloisField& f, std::uint64_t generator_exponent = 1);

/// Closed-form scaled idempotents for an adjacency matrix of a Paley-type
/// strongly regular graph on q = p^2 vertices.
struct GraphIdempotents {
  IntMatrix E1, E2, E3;
};

struct PaleyPeisertData {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  IntMatrix X, Xstar;
  Integer k, r, s;
  GraphIdempotents paley, peisert;
};

/// E1 = J, E2 = sJ + pX - psI, E3 = rJ - pX + prI.
GraphIdempotents graph_idempotents(const IntMatrix& x, std::uint32_t p);

/// Builds both graphs on F_{p^2} and checks E_i^2 = p^2 E_i, E_i E_j = 0 and the
/// rank profile (1, k, k). Throws Error on any identity failure.
PaleyPeisertData paley_idempotent_data(std::uint32_t p);

struct SmithLemmaEntry {
  std::string name;  // e.g. "paley.E2"
  std::map<Integer, std::size_t> invariant_counts;
  std::size_t count_one = 0, count_p = 0, count_p2 = 0, count_other = 0;
  bool pass = false;
};

struct SmithLemmaReport {
  std::uint32_t p = 0;
  std::size_t expected_p = 0;   // (p+1)^2/4 - 2
  std::size_t expected_p2 = 0;  // (p-1)^2/4
  std::vector<SmithLemmaEntry> entries;
  bool pass = false;
};

/// Smith invariants of E2 and E3 for both graphs against the predicted
/// multiset: one 1, (p+1)^2/4 - 2 copies of p, (p-1)^2/4 copies of p^2.
SmithLemmaReport verify_smith_lemma(std::uint32_t p);
SmithLemmaReport verify_smith_lemma(const PaleyPeisertData& data);

}  // namespace glconj
