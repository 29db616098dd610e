#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glconj/linalg.hpp"
#include "test_support.hpp"

using namespace glconj;
using glconj::testing::ints;

namespace {

bool is_hnf(const IntMatrix& h) {
  std::size_t prev_pivot = 0;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t c = 0;
    while (c < h.cols() && sgn(h(i, c)) == 0) ++c;
    if (c == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (i > 0 && c <= prev_pivot) return false;
    if (sgn(h(i, c)) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (sgn(h(k, c)) < 0 || h(k, c) >= h(i, c)) return false;
    for (std::size_t k = i + 1; k < h.rows(); ++k)
      if (sgn(h(k, c)) != 0) return false;
    prev_pivot = c;
  }
  return true;
}

bool unimodular(const IntMatrix& u) { return abs(det(u)) == 1; }

// Two-dimensional Gauss (Lagrange) reduction, used as an oracle for the
// shortest vector of a rank-2 lattice.
Integer gauss_shortest_norm2(std::vector<Integer> u, std::vector<Integer> v) {
  auto dot = [](const std::vector<Integer>& a, const std::vector<Integer>& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  for (;;) {
    if (dot(u, u) > dot(v, v)) std::swap(u, v);
    Integer q = floor_div(2 * dot(u, v) + dot(u, u), 2 * dot(u, u));
    if (q == 0) return dot(u, u);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= q * u[i];
  }
}

}  // namespace

TEST_CASE("hnf small cases") {
  auto id = hnf(IntMatrix::identity(2));
  CHECK(id.H == IntMatrix::identity(2));
  CHECK(id.U == IntMatrix::identity(2));

  IntMatrix d2{{2, 0}, {0, 2}};
  CHECK(hnf(d2).H == d2);

  IntMatrix a{{2, 4}, {1, 3}};
  auto h = hnf(a);
  CHECK(h.H == IntMatrix{{1, 1}, {0, 2}});
  CHECK(h.U * a == h.H);
  CHECK(unimodular(h.U));
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix a = glconj::testing::random_matrix(rng, dim(rng), dim(rng), -9, 9);
    auto h = hnf(a);
    CHECK(h.U * a == h.H);
    CHECK(unimodular(h.U));
    CHECK(is_hnf(h.H));
    CHECK(h.rank == rank(a));
    CHECK(hnf(h.H).H == h.H);
  }
}

TEST_CASE("snf examples") {
  IntMatrix d{{4, 0}, {0, 6}};
  CHECK(snf(d).invariants == ints({2, 12}));
  CHECK(snf(IntMatrix::zero(3, 3)).invariants.empty());
  IntMatrix x{{0, 2}, {-3, 0}};
  auto s = snf(x);
  CHECK(s.invariants == ints({1, 6}));
  CHECK(s.U * x * s.V == s.D);
  CHECK(smith_invariants(x) == ints({1, 6}));
}

TEST_CASE("snf round trip, unimodularity, divisibility and minors oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  int minor_checks = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t m = dim(rng), n = dim(rng);
    IntMatrix a = glconj::testing::random_matrix(rng, m, n, -9, 9);
    if (iter % 7 == 0 && m > 1) {
      // Force rank deficiency now and then.
      for (std::size_t j = 0; j < n; ++j) a(m - 1, j) = 2 * a(0, j);
    }
    auto s = snf(a);
    REQUIRE(s.U * a * s.V == s.D);
    CHECK(unimodular(s.U));
    CHECK(unimodular(s.V));
    CHECK(s.D.rows() == m);
    CHECK(s.D.cols() == n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(sgn(s.D(i, j)) == 0);
    for (std::size_t i = 0; i < s.invariants.size(); ++i) {
      CHECK(sgn(s.invariants[i]) > 0);
      CHECK(s.D(i, i) == s.invariants[i]);
      if (i > 0) CHECK(mpz_divisible_p(s.invariants[i].get_mpz_t(), s.invariants[i - 1].get_mpz_t()));
    }
    for (std::size_t i = s.invariants.size(); i < std::min(m, n); ++i) CHECK(sgn(s.D(i, i)) == 0);
    CHECK(smith_invariants(a) == s.invariants);
    if (m <= 4 && n <= 4) {
      CHECK(s.invariants == glconj::testing::invariants_from_minors(a));
      ++minor_checks;
    }
  }
  CHECK(minor_checks > 100);
}

TEST_CASE("smith invariants on larger matrices agree with transform path") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 10; ++iter) {
    IntMatrix a = glconj::testing::random_matrix(rng, 12, 12, -3, 3);
    for (std::size_t j = 0; j < 12; ++j) a(11, j) = a(0, j) + 3 * a(1, j);
    CHECK(smith_invariants(a) == snf(a).invariants);
  }
}

TEST_CASE("smith group") {
  IntMatrix e1{{0, 2}, {0, 5}};
  auto g = smith_group(e1);
  CHECK(g.invariants == ints({1}));
  CHECK(g.exponent == 1);
  auto gi = smith_group(IntMatrix::identity(4));
  CHECK(gi.invariants == ints({1, 1, 1, 1}));
  CHECK(gi.exponent == 1);
  IntMatrix d{{4, 0}, {0, 6}};
  CHECK(smith_group(d).exponent == 12);
  CHECK(smith_group(IntMatrix::zero(2, 2)).exponent == 1);
}

TEST_CASE("kernel basis") {
  IntMatrix a{{1, 2, 3}};
  auto k = kernel_basis(a);
  CHECK(k.rank() == 2);
  for (const auto& v : k.vectors) CHECK(a * std::span<const Integer>(v) == ints({0}));
  CHECK(smith_invariants(k.as_rows()) == ints({1, 1}));

  CHECK(kernel_basis(IntMatrix::identity(3)).rank() == 0);
  CHECK(kernel_basis(IntMatrix::zero(4, 4)).rank() == 4);
}

TEST_CASE("kernel basis is saturated and complete on random input") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t m = dim(rng), n = dim(rng) + 1;
    IntMatrix a = glconj::testing::random_matrix(rng, m, n, -5, 5);
    // Scale a row so naive rational kernels would not be saturated.
    for (std::size_t j = 0; j < n; ++j) a(0, j) *= 6;
    auto k = kernel_basis(a);
    CHECK(k.rank() == n - rank(a));
    for (const auto& v : k.vectors) {
      auto av = a * std::span<const Integer>(v);
      for (const auto& x : av) CHECK(sgn(x) == 0);
    }
    if (k.rank() > 0) {
      auto inv = smith_invariants(k.as_rows());
      CHECK(inv.size() == k.rank());
      for (const auto& d : inv) CHECK(d == 1);
    }
  }
}

TEST_CASE("lll reduction") {
  LatticeBasis orth{3, {ints({0, 3, 0}), ints({2, 0, 0}), ints({0, 0, -1})}};
  auto r = lll_reduce(orth);
  CHECK(is_lll_reduced(r));
  auto norms = [](const LatticeBasis& b) {
    std::vector<Integer> out;
    for (const auto& v : b.vectors) {
      Integer s = 0;
      for (const auto& x : v) s += x * x;
      out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(norms(r) == norms(orth));

  LatticeBasis skew{2, {ints({1, 0}), ints({10, 1})}};
  auto s = lll_reduce(skew);
  const Integer shortest = gauss_shortest_norm2(skew.vectors[0], skew.vectors[1]);
  CHECK(shortest <= 2);
  CHECK(norms(s).front() == shortest);
  CHECK(gram_determinant(s) == gram_determinant(skew));
}

TEST_CASE("lll preserves the lattice and satisfies Lovasz") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 2 + iter % 4, dim = n + iter % 3;
    IntMatrix m = glconj::testing::random_matrix(rng, n, dim, -30, 30);
    if (rank(m) < n) continue;
    LatticeBasis b{dim, {}};
    for (std::size_t i = 0; i < n; ++i) b.vectors.push_back(m.row_vector(i));
    auto r = lll_reduce(b);
    CHECK(is_lll_reduced(r));
    CHECK(gram_determinant(r) == gram_determinant(b));
    // Same lattice: identical Hermite forms.
    CHECK(hnf(r.as_rows()).H == hnf(b.as_rows()).H);
  }
}

TEST_CASE("det and rank") {
  IntMatrix d{{1, 0}, {0, 2}};
  CHECK(det(d) == 2);
  CHECK(det(IntMatrix::identity(5)) == 1);
  CHECK(rank(IntMatrix{{0, 2}, {0, 5}}) == 1);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), ShapeError);

  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 1 + iter % 5;
    IntMatrix a = glconj::testing::random_matrix(rng, n, n, -9, 9);
    CHECK(det(a) == glconj::testing::cofactor_det(a));
    for (std::uint64_t p : {2u, 3u, 7u, 2147483647u}) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), det(a).get_mpz_t(), p);
      CHECK(det_mod_prime(a, p) == r.get_ui());
    }
  }
}

TEST_CASE("saturation at a prime") {
  // Lattice spanned by (2,0,0) and (1,1,0)+(1,-1,0) = (2,0,0)... use a cleaner one:
  // L = <(2,2,0), (0,3,3)> has saturation index 6 in Q L cap Z^3.
  std::vector<std::vector<Integer>> b{ints({2, 2, 0}), ints({0, 3, 3})};
  saturate_at_prime(b, 2);
  saturate_at_prime(b, 3);
  auto inv = smith_invariants(IntMatrix::from_rows(b, 3));
  CHECK(inv == ints({1, 1}));
  // Still inside the same rational span.
  IntMatrix stacked = IntMatrix::from_rows({ints({2, 2, 0}), ints({0, 3, 3}), b[0], b[1]}, 3);
  CHECK(rank(stacked) == 2);
}

TEST_CASE("left nullspace mod p has exclusive pivots") {
  IntMatrix b{{1, 2}, {2, 4}, {3, 6}, {0, 1}};
  auto null = left_nullspace_mod_prime(b, 5);
  CHECK(null.size() == 2);
  for (const auto& c : null) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      unsigned long s = 0;
      for (std::size_t i = 0; i < b.rows(); ++i) s += c[i] * b(i, j).get_ui();
      CHECK(s % 5 == 0);
    }
  }
}
