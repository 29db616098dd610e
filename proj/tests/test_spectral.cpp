#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glconj/linalg.hpp"
#include "glconj/spectral.hpp"
#include "test_support.hpp"

using namespace glconj;
using glconj::testing::ints;

TEST_CASE("minimal polynomial examples") {
  CHECK(minimal_polynomial(IntMatrix::identity(3)) == IntPolynomial(ints({-1, 1})));
  CHECK(minimal_polynomial(IntMatrix{{1, 2}, {0, 6}}) == IntPolynomial(ints({6, -7, 1})));
  CHECK(minimal_polynomial(IntMatrix{{0, 2}, {-3, 0}}) == IntPolynomial(ints({6, 0, 1})));
  CHECK(minimal_polynomial(IntMatrix{{1, 1}, {0, 1}}) == IntPolynomial(ints({1, -2, 1})));
  CHECK(IntPolynomial(ints({6, -7, 1})).to_string() == "t^2 - 7t + 6");
}

TEST_CASE("characteristic polynomial agrees with cofactor expansion of tI - X") {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 1 + iter % 5;
    IntMatrix x = glconj::testing::random_matrix(rng, n, n, -20, 20);
    auto cp = characteristic_polynomial(x);
    CHECK(cp.degree() == static_cast<int>(n));
    CHECK(cp.leading() == 1);
    for (long t : {-3L, 0L, 2L, 7L}) {
      IntMatrix m = -x;
      for (std::size_t i = 0; i < n; ++i) m(i, i) += t;
      CHECK(cp.evaluate(Integer(t)) == glconj::testing::cofactor_det(m));
    }
    // Cayley-Hamilton.
    CHECK(cp.evaluate(x).is_zero());
  }
}

TEST_CASE("split spectrum of the (t-1)(t-6) example") {
  IntMatrix x{{1, 2}, {0, 6}};
  auto s = split_spectrum(x);
  CHECK(s.eigenvalues == ints({1, 6}));
  CHECK(s.multiplicities == std::vector<std::size_t>{1, 1});
  CHECK(s.E[0] == IntMatrix{{5, -2}, {0, 0}});
  CHECK(s.E[1] == IntMatrix{{0, 2}, {0, 5}});
  CHECK(s.q == ints({5, 5}));
  CHECK(verify_idempotent_identities(x, s));
  CHECK(s.minimal_polynomial() == minimal_polynomial(x));
}

TEST_CASE("split spectrum edge cases") {
  IntMatrix d{{2, 0}, {0, 2}};
  auto s = split_spectrum(d);
  CHECK(s.eigenvalues == ints({2}));
  CHECK(s.E[0] == IntMatrix::identity(2));
  CHECK(s.q == ints({1}));
  CHECK_THROWS_AS(split_spectrum(IntMatrix{{0, 2}, {-3, 0}}), NotSplit);
  CHECK_THROWS_AS(split_spectrum(IntMatrix{{1, 1}, {0, 1}}), NotSplit);
}

TEST_CASE("assumption on the small examples") {
  auto r = check_assumption(IntMatrix{{1, 2}, {0, 6}});
  CHECK_FALSE(r.clause_a);
  CHECK_FALSE(r.clause_b);
  REQUIRE(r.per_index.size() == 2);
  for (const auto& ir : r.per_index) {
    CHECK(ir.q == 5);
    CHECK(ir.smith_exponent == 1);
  }
  auto y = check_assumption(IntMatrix{{1, 1}, {0, 6}});
  CHECK_FALSE(y.holds());

  for (std::size_t n : {1u, 3u, 5u}) {
    auto id = check_assumption(IntMatrix::identity(n));
    CHECK(id.clause_a);
    CHECK(id.per_index.size() == 1);
    CHECK(id.per_index[0].q == 1);
    CHECK(id.per_index[0].smith_exponent == 1);
  }
  // diag(0, 1): both idempotents are rank one with q = 1.
  auto d = check_assumption(IntMatrix{{0, 0}, {0, 1}});
  CHECK(d.clause_a);
  CHECK(d.clause_b);
  CHECK(d.witness_index_for_b == std::size_t{0});
}

TEST_CASE("clause (b) picks a rank-one idempotent whose complement is exact") {
  // Eigenvalues 0 (rank 1) and 2 (rank 1), E = X and 2 - X with q = 2:
  // X = [[1,1],[1,1]] -> E_0 = 2 - X = [[1,-1],[-1,1]] (exponent 1 != 2).
  IntMatrix x{{1, 1}, {1, 1}};
  auto r = check_assumption(x);
  CHECK_FALSE(r.clause_a);
  CHECK_FALSE(r.clause_b);
  // 3x3 all-ones: eigenvalues 0 (rank 2) and 3 (rank 1, E = J).
  IntMatrix j = IntMatrix::all_ones(3);
  auto rj = check_assumption(j);
  REQUIRE(rj.per_index.size() == 2);
  CHECK(rj.per_index[1].rank == 1);
  CHECK(rj.per_index[1].q == 3);
  CHECK(rj.per_index[0].q == 3);
  // E_0 = 3I - J has invariants (1, 3): exponent 3 = q, so (b) holds with J as e_1.
  CHECK(rj.per_index[0].smith_exponent == 3);
  CHECK(rj.clause_b);
  CHECK(rj.witness_index_for_b == std::size_t{1});
  CHECK_FALSE(rj.clause_a);
}

TEST_CASE("quotient invariants") {
  CHECK(quotient_invariants(IntMatrix::identity(3), Integer(1)) == ints({1, 1, 1}));
  CHECK(quotient_invariants(IntMatrix{{0, 2}, {0, 5}}, Integer(5)) == ints({5}));
  CHECK(quotient_invariants(IntMatrix{{3, 0}, {0, 9}}, Integer(9)) == ints({3, 1}));
  CHECK_THROWS_AS(quotient_invariants(IntMatrix{{2, 0}, {0, 4}}, Integer(6)), DivisibilityViolation);
}

TEST_CASE("spectral properties on random split matrices") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 120; ++iter) {
    const std::size_t n = 1 + iter % 6;
    IntMatrix x = glconj::testing::random_split_matrix(rng, n);
    auto s = split_spectrum(x);
    CHECK(verify_idempotent_identities(x, s));
    std::size_t total = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(rank(s.E[i]) == s.multiplicities[i]);
      total += s.multiplicities[i];
      // q_i divides prod_{j != i} (a_i - a_j).
      Integer prod = 1;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) prod *= s.eigenvalues[i] - s.eigenvalues[j];
      CHECK(mpz_divisible_p(prod.get_mpz_t(), s.q[i].get_mpz_t()));
      // Smith exponent divides q_i, so the quotient invariants are integral.
      auto g = smith_group(s.E[i]);
      CHECK(mpz_divisible_p(s.q[i].get_mpz_t(), g.exponent.get_mpz_t()));
      auto m = quotient_invariants(s.E[i], s.q[i]);
      CHECK(m.size() == s.multiplicities[i]);
    }
    CHECK(total == n);
    // Characteristic polynomial is prod (t - a_i)^{n_i}.
    IntPolynomial cp({Integer(1)});
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t r = 0; r < s.multiplicities[i]; ++r)
        cp = cp * IntPolynomial::linear_root(s.eigenvalues[i]);
    CHECK(characteristic_polynomial(x) == cp);

    // Conjugation invariance of the assumption report.
    auto [u, uinv] = glconj::testing::random_unimodular_pair(rng, n, 8, 2);
    IntMatrix y = u * x * uinv;
    auto rx = check_assumption(s);
    auto ry = check_assumption(y);
    CHECK(rx.clause_a == ry.clause_a);
    CHECK(rx.clause_b == ry.clause_b);
    REQUIRE(rx.per_index.size() == ry.per_index.size());
    for (std::size_t i = 0; i < rx.per_index.size(); ++i) {
      CHECK(rx.per_index[i].q == ry.per_index[i].q);
      CHECK(rx.per_index[i].smith_exponent == ry.per_index[i].smith_exponent);
    }
  }
}
