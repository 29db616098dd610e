#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glconj/galois.hpp"

namespace glconj {

class ZeroInput : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// Z_p[t]/(m) truncated mod p^N, where m is the field modulus read as an
/// integer polynomial. Its reduction mod p is the field it was built from.
class UnramifiedRing {
 public:
  using Element = std::vector<std::int64_t>;  // degree coefficients, constant first

  UnramifiedRing(const GaloisField& field, std::uint32_t precision);

  const GaloisField& field() const { return field_; }
  std::uint32_t precision() const { return precision_; }
  std::int64_t modulus_pn() const { return pn_; }
  std::size_t degree() const { return field_.degree(); }

  Element zero() const { return Element(degree(), 0); }
  Element from_integer(std::int64_t a) const;
  /// Coefficient vector of a field element, digits taken verbatim.
  Element lift(std::uint32_t x) const;
  std::uint32_t reduce(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(Element a, std::uint64_t e) const;

  /// Minimum p-adic valuation over the coefficients; nullopt for 0 mod p^N.
  std::optional<std::uint32_t> valuation(const Element& a) const;

  std::string to_string(const Element& a) const;

 private:
  GaloisField field_;
  std::uint32_t precision_;
  std::int64_t pn_;
};

/// omega(x): the root of unity of order dividing q-1 congruent to x mod p,
/// found by iterating z -> z^q from the verbatim lift.
UnramifiedRing::Element teichmuller(const UnramifiedRing& ring, std::uint32_t x);
/// Same iteration from an arbitrary starting lift of x.
UnramifiedRing::Element teichmuller_from(const UnramifiedRing& ring, UnramifiedRing::Element z);

struct JacobiSumRecord {
  std::uint64_t j = 0;
  UnramifiedRing::Element alpha;
  std::uint32_t valuation = 0;
  std::optional<std::uint32_t> c_j;  // defined for 1 <= j <= k-1
};

/// Powers omega(beta)^i for 0 <= i < q-1.
std::vector<UnramifiedRing::Element> teichmuller_table(const UnramifiedRing& ring);

/// alpha_j = sum over x != 0, 1 of omega(x)^{-j} omega(1-x)^k, with k = (q-1)/2.
/// Throws PrecisionExhausted if alpha_j vanishes mod p^N.
JacobiSumRecord jacobi_sum(const UnramifiedRing& ring, std::uint64_t j);
JacobiSumRecord jacobi_sum(const UnramifiedRing& ring,
                           const std::vector<UnramifiedRing::Element>& table, std::uint64_t j);

/// a + b where j = a p + b mod p^2.
std::uint32_t digit_sum(std::int64_t j, std::uint32_t p);
/// (s(j) + s(k) - s(j+k)) / (p-1) with k = (p^2-1)/2.
std::uint32_t c_of_j(std::uint64_t j, std::uint32_t p);

struct CaseCounts {
  std::size_t c0 = 0, c1 = 0;
};
CaseCounts count_cases(std::uint32_t p);

struct JacobiReport {
  std::uint32_t p = 0;
  std::uint32_t precision = 0;
  std::vector<JacobiSumRecord> records;  // j = 1..k-1
  bool valuations_match = false;
  bool products_match = false;  // alpha_j alpha_{j+k} == p^2
  CaseCounts counts;
  bool counts_match = false;
  bool pass() const { return valuations_match && products_match && counts_match; }
};

JacobiReport jacobi_report(std::uint32_t p, std::uint32_t precision = 4);

}  // namespace glconj
