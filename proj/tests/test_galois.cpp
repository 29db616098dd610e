#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "glconj/galois.hpp"
#include "glconj/linalg.hpp"
#include "glconj/polynomial.hpp"
#include "glconj/spectral.hpp"

using namespace glconj;

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

void check_adjacency(const IntMatrix& a, std::uint32_t q) {
  const Integer k((q - 1) / 2);
  CHECK(a.rows() == q);
  CHECK(a == a.transpose());
  for (std::uint32_t i = 0; i < q; ++i) {
    CHECK(a(i, i) == 0);
    Integer sum = 0;
    for (std::uint32_t j = 0; j < q; ++j) {
      CHECK((a(i, j) == 0 || a(i, j) == 1));
      sum += a(i, j);
    }
    CHECK(sum == k);
  }
  const IntMatrix j = IntMatrix::all_ones(q);
  CHECK(j * a == k * j);
  CHECK(a * j == k * j);
}

}  // namespace

TEST_CASE("field construction") {
  auto f3 = field_build(3, 2);
  CHECK(f3.q() == 9);
  CHECK(f3.modulus() == std::vector<std::uint32_t>{2, 1, 1});
  CHECK(f3.modulus_string() == "x^2 + x + 2");

  for (std::uint32_t p : {3u, 7u, 11u, 19u}) {
    auto f = field_build(p, 2);
    const std::uint32_t q = f.q();
    CHECK(q == p * p);
    CHECK(is_irreducible_mod_p(f.modulus(), p));
    CHECK(f.pow(f.beta(), q - 1) == 1);
    for (auto d : prime_factors(q - 1)) CHECK(f.pow(f.beta(), (q - 1) / d) != 1);
    // No smaller modulus (same ordering) has x primitive.
    for (std::uint32_t v = 0; v < f.from_digits({f.modulus()[0], f.modulus()[1]}); ++v) {
      std::vector<std::uint32_t> m{v % p, v / p, 1};
      if (m[0] == 0 || !is_irreducible_mod_p(m, p)) continue;
      CHECK_THROWS_AS(GaloisField(p, 2, m), DomainError);
    }
  }
  CHECK_THROWS_AS(field_build(5, 2), DomainError);
  CHECK_THROWS_AS(field_build(7, 3), DomainError);
  CHECK_THROWS_AS(field_build(9, 2), DomainError);
}

TEST_CASE("field arithmetic against a degree-4 extension") {
  auto f = field_build(3, 4);
  CHECK(f.q() == 81);
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a == 0) continue;
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.beta_power(f.log(a)) == a);
    for (std::uint32_t b = 1; b < f.q(); b += 7) {
      // Distributivity ties the additive digit arithmetic to the log tables.
      const std::uint32_t c = f.beta_power(5);
      CHECK(f.mul(c, f.add(a, b)) == f.add(f.mul(c, a), f.mul(c, b)));
    }
  }
}

TEST_CASE("quarter cosets") {
  for (std::uint32_t p : {3u, 7u}) {
    auto f = field_build(p, 2);
    auto cs = quarter_cosets(f);
    std::set<std::uint32_t> all;
    for (const auto& c : cs) {
      CHECK(c.size() == (f.q() - 1) / 4);
      all.insert(c.begin(), c.end());
    }
    CHECK(all.size() == f.q() - 1);
    CHECK(!all.count(0));
    const std::set<std::uint32_t> u(cs[0].begin(), cs[0].end());
    for (auto a : cs[0])
      for (auto b : cs[0]) CHECK(u.count(f.mul(a, b)));
    // -1 lies in U, which makes the Peisert graph undirected.
    CHECK(u.count(f.neg(1)));
  }
}

TEST_CASE("Paley and Peisert adjacency") {
  for (std::uint32_t p : {3u, 7u}) {
    auto f = field_build(p, 2);
    auto x = paley_adjacency(f);
    auto xs = peisert_adjacency(f);
    check_adjacency(x, f.q());
    check_adjacency(xs, f.q());
    CHECK(characteristic_polynomial(x) == characteristic_polynomial(xs));
    // Squares do not depend on the primitive element.
    CHECK(peisert_adjacency(f, 1) == xs);
    if (p == 7) CHECK(!(peisert_adjacency(f, 11) == xs));
  }
  auto s = split_spectrum(paley_adjacency(field_build(3, 2)));
  CHECK(s.eigenvalues == std::vector<Integer>{-2, 1, 4});
  CHECK(s.multiplicities == std::vector<std::size_t>{4, 4, 1});
  CHECK_THROWS_AS(peisert_adjacency(field_build(7, 2), 2), DomainError);
  CHECK_THROWS_AS(peisert_adjacency(field_build(7, 2), 3), DomainError);
}

TEST_CASE("idempotent data at p = 3") {
  auto d = paley_idempotent_data(3);
  CHECK(d.k == 4);
  CHECK(d.r == 1);
  CHECK(d.s == -2);
  const IntMatrix j = IntMatrix::all_ones(9), id = IntMatrix::identity(9);
  CHECK(d.paley.E1 == j);
  CHECK(d.paley.E2 == Integer(-2) * j + Integer(3) * d.X + Integer(6) * id);
  CHECK(d.paley.E2 * d.paley.E2 == Integer(9) * d.paley.E2);
  CHECK(d.paley.E2.trace() == 36);
  CHECK(rank(d.paley.E1) == 1);
  CHECK(rank(d.paley.E2) == 4);
  CHECK(rank(d.peisert.E3) == 4);
  CHECK(smith_invariants(d.paley.E2) == std::vector<Integer>{1, 3, 3, 9});
  CHECK(quotient_invariants(d.paley.E2, 9) == std::vector<Integer>{9, 3, 3, 1});
}

TEST_CASE("closed-form idempotents match the spectral construction") {
  for (std::uint32_t p : {3u, 7u}) {
    auto d = paley_idempotent_data(p);
    for (const IntMatrix* x : {&d.X, &d.Xstar}) {
      auto s = split_spectrum(*x);
      REQUIRE(s.size() == 3);
      CHECK(verify_idempotent_identities(*x, s));
      auto e = graph_idempotents(*x, p);
      // Ascending eigenvalues s < r < k map to E3, E2, E1.
      CHECK(s.eigenvalues == std::vector<Integer>{d.s, d.r, d.k});
      CHECK(s.q == std::vector<Integer>(3, Integer(p * p)));
      CHECK(s.E[0] == e.E3);
      CHECK(s.E[1] == e.E2);
      CHECK(s.E[2] == e.E1);
    }
  }
}

TEST_CASE("Smith lemma") {
  for (std::uint32_t p : {3u, 7u, 11u}) {
    CAPTURE(p);
    auto d = paley_idempotent_data(p);
    auto rep = verify_smith_lemma(d);
    CHECK(rep.pass);
    CHECK(rep.entries.size() == 4);
    for (const auto& e : rep.entries) {
      CAPTURE(e.name);
      CHECK(e.count_one == 1);
      CHECK(e.count_p == rep.expected_p);
      CHECK(e.count_p2 == rep.expected_p2);
      CHECK(e.count_other == 0);
    }
    CHECK(rep.entries[0].invariant_counts == rep.entries[2].invariant_counts);
    CHECK(rep.entries[1].invariant_counts == rep.entries[3].invariant_counts);

    auto a = check_assumption(d.X);
    CHECK(a.clause_b);
    CHECK(!a.clause_a);
    REQUIRE(a.witness_index_for_b);
    CHECK(a.per_index[*a.witness_index_for_b].eigenvalue == d.k);
    CHECK(check_assumption(d.Xstar).clause_b);
  }
  auto r3 = verify_smith_lemma(3);
  CHECK(r3.expected_p == 2);
  CHECK(r3.expected_p2 == 1);
  auto r7 = verify_smith_lemma(7);
  CHECK(r7.expected_p == 14);
  CHECK(r7.expected_p2 == 9);
}

TEST_CASE("Peisert graph for a second primitive element at p = 7") {
  auto f = field_build(7, 2);
  auto alt = peisert_adjacency(f, 11);
  check_adjacency(alt, 49);
  auto e = graph_idempotents(alt, 7);
  auto std_e = graph_idempotents(peisert_adjacency(f), 7);
  CHECK(smith_invariants(e.E2) == smith_invariants(std_e.E2));
  CHECK(smith_invariants(e.E3) == smith_invariants(std_e.E3));
  CHECK(check_assumption(alt).clause_b);
}
