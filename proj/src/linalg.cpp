#include "glconj/linalg.hpp"

#include <algorithm>
#include <utility>

namespace glconj {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

namespace {

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Applies [[s, t], [u, v]] (det 1) to rows r1, r2 of m.
void combine_rows(IntMatrix& m, std::size_t r1, std::size_t r2, const Integer& s,
                  const Integer& t, const Integer& u, const Integer& v) {
  Integer x, y;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer& a = m(r1, j);
    Integer& b = m(r2, j);
    if (sgn(a) == 0 && sgn(b) == 0) continue;
    x = s * a + t * b;
    y = u * a + v * b;
    a.swap(x);
    b.swap(y);
  }
}

}  // namespace

namespace {

HermiteForm hnf_impl(const IntMatrix& a, bool transforms) {
  HermiteForm out{a, transforms ? IntMatrix::identity(a.rows()) : IntMatrix(), 0};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  const std::size_t m = h.rows();
  std::size_t r = 0;
  Integer g, s, t, q;
  for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
    // Bring the smallest nonzero entry of the column up, which keeps growth down.
    std::size_t best = m;
    for (std::size_t i = r; i < m; ++i)
      if (sgn(h(i, c)) != 0 && (best == m || cmpabs(h(i, c), h(best, c)) < 0)) best = i;
    if (best == m) continue;
    h.swap_rows(r, best);
    if (transforms) u.swap_rows(r, best);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      const Integer pa = h(r, c);
      const Integer pb = h(i, c);
      if (mpz_divisible_p(pb.get_mpz_t(), pa.get_mpz_t())) {
        q = -(pb / pa);
        h.add_row_multiple(i, r, q);
        if (transforms) u.add_row_multiple(i, r, q);
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
      const Integer nu = -(pb / g);
      const Integer nv = pa / g;
      combine_rows(h, r, i, s, t, nu, nv);
      if (transforms) combine_rows(u, r, i, s, t, nu, nv);
    }
    if (sgn(h(r, c)) < 0) {
      h.negate_row(r);
      if (transforms) u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      q = -floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, q);
      if (transforms) u.add_row_multiple(i, r, q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace

HermiteForm hnf(const IntMatrix& a) { return hnf_impl(a, true); }

namespace {

struct SnfWork {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  bool transforms;
};

void snf_eliminate(SnfWork& w) {
  IntMatrix& d = w.d;
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  Integer q;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Minimal-absolute-value pivot in the trailing block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(d(i, j)) != 0 && (pi == m || cmpabs(d(i, j), d(pi, pj)) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    d.swap_rows(t, pi);
    d.swap_cols(t, pj);
    if (w.transforms) {
      w.u.swap_rows(t, pi);
      w.v.swap_cols(t, pj);
    }
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        q = -trunc_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, q);
        if (w.transforms) w.u.add_row_multiple(i, t, q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        q = -trunc_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, q);
        if (w.transforms) w.v.add_col_multiple(j, t, q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t onto the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(d(i, t)) != 0 && cmpabs(d(i, t), d(bi, bj)) < 0) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d(t, j)) != 0 && cmpabs(d(t, j), d(bi, bj)) < 0) {
            bi = t;
            bj = j;
          }
        if (bi != t) {
          d.swap_rows(t, bi);
          if (w.transforms) w.u.swap_rows(t, bi);
        }
        if (bj != t) {
          d.swap_cols(t, bj);
          if (w.transforms) w.v.swap_cols(t, bj);
        }
        continue;
      }
      // Row and column are clear; enforce divisibility into the trailing block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      d.add_row_multiple(t, bad, Integer(1));
      if (w.transforms) w.u.add_row_multiple(t, bad, Integer(1));
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      if (w.transforms) w.u.negate_row(t);
    }
  }
}

std::vector<Integer> diagonal_invariants(const IntMatrix& d) {
  std::vector<Integer> inv;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (sgn(d(i, i)) == 0) break;
    inv.push_back(d(i, i));
  }
  return inv;
}

}  // namespace

SnfDecomposition snf(const IntMatrix& a) {
  SnfWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), true};
  snf_eliminate(w);
  SnfDecomposition out;
  out.invariants = diagonal_invariants(w.d);
  out.U = std::move(w.u);
  out.D = std::move(w.d);
  out.V = std::move(w.v);
  return out;
}

namespace {

struct EchelonProfile {
  std::size_t rank = 0;
  Integer minor = 1;  // a nonzero rank x rank minor
};

// Fraction-free row echelon; the last pivot is the minor on the pivot rows
// and columns.
EchelonProfile fraction_free_profile(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  EchelonProfile out;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && out.rank < rows; ++c) {
    const std::size_t r = out.rank;
    std::size_t piv = r;
    while (piv < rows && sgn(m(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer& x = m(i, j);
        x *= m(r, c);
        mpz_submul(x.get_mpz_t(), m(i, c).get_mpz_t(), m(r, j).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++out.rank;
  }
  out.minor = abs(prev);
  return out;
}

void reduce_row_mod(IntMatrix& d, std::size_t i, const Integer& mod) {
  for (auto& e : d.row(i)) mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
}

void reduce_col_mod(IntMatrix& d, std::size_t j, const Integer& mod) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    mpz_fdiv_r(d(i, j).get_mpz_t(), d(i, j).get_mpz_t(), mod.get_mpz_t());
}

// Scales row t by a unit of Z/mod so the pivot becomes gcd(pivot, mod).
void normalize_pivot(IntMatrix& d, std::size_t t, const Integer& mod) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), d(t, t).get_mpz_t(), mod.get_mpz_t());
  if (d(t, t) == g) return;
  const Integer a = d(t, t) / g, m = mod / g;
  Integer u = 1, h;
  if (m != 1) mpz_invert(u.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  for (;;) {
    mpz_gcd(h.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    if (h == 1) break;
    u += m;
  }
  for (auto& e : d.row(t)) e *= u;
  reduce_row_mod(d, t, mod);
}

// Smith form over Z/mod; invariants dividing mod survive unchanged.
std::vector<Integer> snf_mod(IntMatrix d, const Integer& mod) {
  const std::size_t m = d.rows(), n = d.cols();
  for (auto& e : d.entries()) mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  std::vector<Integer> inv;
  Integer q;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(d(i, j)) != 0 && (pi == m || d(i, j) < d(pi, pj))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    d.swap_rows(t, pi);
    d.swap_cols(t, pj);
    normalize_pivot(d, t, mod);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        q = -floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, q);
        reduce_row_mod(d, i, mod);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        q = -floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, q);
        reduce_col_mod(d, j, mod);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(d(i, t)) != 0 && d(i, t) < d(bi, bj)) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d(t, j)) != 0 && d(t, j) < d(bi, bj)) {
            bi = t;
            bj = j;
          }
        d.swap_rows(t, bi);
        d.swap_cols(t, bj);
        normalize_pivot(d, t, mod);
        continue;
      }
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      d.add_row_multiple(t, bad, Integer(1));
      reduce_row_mod(d, t, mod);
    }
    inv.push_back(d(t, t));
  }
  return inv;
}

}  // namespace

std::vector<Integer> smith_invariants(const IntMatrix& a) {
  // Every invariant divides a nonzero maximal minor M, so the elimination can
  // run modulo 2M (the last invariant may equal M).
  const EchelonProfile prof = fraction_free_profile(a);
  if (prof.rank == 0) return {};
  if (prof.minor == 1) return std::vector<Integer>(prof.rank, Integer(1));
  auto inv = snf_mod(a, Integer(2 * prof.minor));
  if (inv.size() != prof.rank) throw Error("smith_invariants: modular rank mismatch");
  return inv;
}

SmithGroup smith_group(const IntMatrix& a) {
  SmithGroup g;
  g.invariants = smith_invariants(a);
  g.exponent = g.invariants.empty() ? Integer(1) : g.invariants.back();
  return g;
}

IntMatrix LatticeBasis::as_rows() const { return IntMatrix::from_rows(vectors, ambient_dim); }

LatticeBasis kernel_basis(const IntMatrix& a) {
  // LLL on the rows (e_i | w A e_i): for a large weight w the reduced basis
  // contains a basis of the vectors with zero tail, which is exactly the
  // saturated kernel, and its entries come out small.
  const std::size_t n = a.cols(), m = a.rows();
  LatticeBasis out;
  out.ambient_dim = n;
  const std::size_t nullity = n - rank(a);
  if (nullity == 0) return out;
  if (nullity == n) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Integer> e(n);
      e[i] = 1;
      out.vectors.push_back(std::move(e));
    }
    return out;
  }
  for (unsigned long bits = 16 + n;; bits *= 2) {
    Integer w;
    mpz_ui_pow_ui(w.get_mpz_t(), 2, bits);
    LatticeBasis aug;
    aug.ambient_dim = n + m;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Integer> v(n + m);
      v[i] = 1;
      for (std::size_t j = 0; j < m; ++j) v[n + j] = w * a(j, i);
      aug.vectors.push_back(std::move(v));
    }
    aug = lll_reduce(aug);
    out.vectors.clear();
    for (const auto& v : aug.vectors) {
      bool zero_tail = true;
      for (std::size_t j = n; j < n + m && zero_tail; ++j) zero_tail = sgn(v[j]) == 0;
      if (zero_tail) out.vectors.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
    }
    if (out.vectors.size() == nullity) return out;
  }
}

namespace {

Integer dot(const std::vector<Integer>& x, const std::vector<Integer>& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0 && sgn(y[i]) != 0) mpz_addmul(s.get_mpz_t(), x[i].get_mpz_t(), y[i].get_mpz_t());
  return s;
}

void sub_multiple(std::vector<Integer>& x, const std::vector<Integer>& y, const Integer& q) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(y[i]) != 0) mpz_submul(x[i].get_mpz_t(), q.get_mpz_t(), y[i].get_mpz_t());
}

// Nearest integer to a / b for b > 0 (ties toward +infinity).
Integer round_div(const Integer& a, const Integer& b) {
  return floor_div(2 * a + b, 2 * b);
}

}  // namespace

LatticeBasis lll_reduce(const LatticeBasis& basis) {
  // Integral LLL: d[i] are the leading Gram minors, lambda[i][j] = d[j] * mu_ij
  // (1-based, d[0] = 1). delta = a / b.
  const Integer delta_num = 99, delta_den = 100;
  LatticeBasis out = basis;
  auto& b = out.vectors;
  const std::size_t n = b.size();
  if (n <= 1) return out;
  std::vector<Integer> d(n + 1);
  std::vector<std::vector<Integer>> lam(n + 1, std::vector<Integer>(n + 1));
  auto B = [&](std::size_t i) -> std::vector<Integer>& { return b[i - 1]; };
  d[0] = 1;
  d[1] = dot(B(1), B(1));
  if (sgn(d[1]) == 0) throw Error("lll_reduce: dependent vectors");

  auto red = [&](std::size_t k, std::size_t l) {
    if (cmpabs(2 * lam[k][l], d[l]) > 0) {
      Integer q = round_div(lam[k][l], d[l]);
      sub_multiple(B(k), B(l), q);
      lam[k][l] -= q * d[l];
      for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }
  };
  std::size_t kmax = 1;
  auto swapk = [&](std::size_t k) {
    std::swap(B(k), B(k - 1));
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const Integer l = lam[k][k - 1];
    const Integer bb = (d[k - 2] * d[k] + l * l) / d[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Integer t = lam[i][k];
      lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
      lam[i][k - 1] = (bb * t + l * lam[i][k]) / d[k];
    }
    d[k - 1] = bb;
  };

  std::size_t k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Integer u = dot(B(k), B(j));
        for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k)
          lam[k][j] = u;
        else {
          if (sgn(u) == 0) throw Error("lll_reduce: dependent vectors");
          d[k] = u;
        }
      }
    }
    red(k, k - 1);
    if (delta_den * d[k] * d[k - 2] <
        delta_num * d[k - 1] * d[k - 1] - delta_den * lam[k][k - 1] * lam[k][k - 1]) {
      swapk(k);
      if (k > 2) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 1;) red(k, l);
      ++k;
    }
  }
  return out;
}

bool is_lll_reduced(const LatticeBasis& basis) {
  const auto& b = basis.vectors;
  const std::size_t n = b.size();
  std::vector<std::vector<mpq_class>> bstar(n);
  std::vector<mpq_class> norm(n);
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    bstar[i].assign(b[i].begin(), b[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      mpq_class ip = 0;
      for (std::size_t t = 0; t < b[i].size(); ++t) ip += mpq_class(b[i][t]) * bstar[j][t];
      mu[i][j] = ip / norm[j];
      for (std::size_t t = 0; t < b[i].size(); ++t) bstar[i][t] -= mu[i][j] * bstar[j][t];
    }
    norm[i] = 0;
    for (const auto& x : bstar[i]) norm[i] += x * x;
    if (sgn(norm[i]) == 0) return false;
  }
  const mpq_class half(1, 2), delta(99, 100);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(mu[i][j]) > half) return false;
  for (std::size_t k = 1; k < n; ++k)
    if (norm[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) return false;
  return true;
}

Integer gram_determinant(const LatticeBasis& basis) {
  const std::size_t n = basis.vectors.size();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = dot(basis.vectors[i], basis.vectors[j]);
  return det(g);
}

Integer det(const IntMatrix& a) {
  if (!a.square()) throw ShapeError("det of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(m(piv, k)) == 0) ++piv;
      if (piv == n) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = m(i, j);
        x *= m(k, k);
        mpz_submul(x.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) {
  // Fraction-free row echelon.
  IntMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer& x = m(i, j);
        x *= m(r, c);
        mpz_submul(x.get_mpz_t(), m(i, c).get_mpz_t(), m(r, j).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> reduce_row(std::span<const Integer> row, std::uint64_t p) {
  std::vector<std::uint32_t> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    out[j] = static_cast<std::uint32_t>(mpz_fdiv_ui(row[j].get_mpz_t(), p));
  return out;
}

// In-place row echelon; returns rank. Only the first `limit` columns are
// used for pivoting.
std::size_t echelon_mod(std::vector<std::vector<std::uint32_t>>& m, std::size_t limit,
                        std::uint64_t p, std::uint64_t* det_out = nullptr) {
  std::size_t r = 0;
  std::uint64_t det = 1;
  const std::size_t rows = m.size();
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) {
      det = 0;
      continue;
    }
    if (piv != r) {
      std::swap(m[piv], m[r]);
      det = (p - det) % p;
    }
    det = det * m[r][c] % p;
    const std::uint64_t inv = inv_mod(m[r][c], p);
    auto& pr = m[r];
    const std::size_t width = pr.size();
    for (std::size_t i = r + 1; i < rows; ++i) {
      auto& ri = m[i];
      if (ri[c] == 0) continue;
      const std::uint64_t f = (p - ri[c] * inv % p) % p;
      for (std::size_t j = c; j < width; ++j)
        if (pr[j]) ri[j] = static_cast<std::uint32_t>((ri[j] + f * pr[j]) % p);
    }
    ++r;
  }
  if (det_out) *det_out = r == rows ? det : 0;
  return r;
}

}  // namespace

std::uint64_t det_mod_prime(const IntMatrix& a, std::uint64_t p) {
  if (!a.square()) throw ShapeError("det of non-square matrix");
  std::vector<std::vector<std::uint32_t>> m;
  for (std::size_t i = 0; i < a.rows(); ++i) m.push_back(reduce_row(a.row(i), p));
  std::uint64_t d = 1;
  echelon_mod(m, a.cols(), p, &d);
  return d;
}

std::size_t rank_mod_prime(const IntMatrix& a, std::uint64_t p) {
  std::vector<std::vector<std::uint32_t>> m;
  for (std::size_t i = 0; i < a.rows(); ++i) m.push_back(reduce_row(a.row(i), p));
  return echelon_mod(m, a.cols(), p);
}

namespace {

std::vector<std::vector<std::uint32_t>> left_nullspace_rows(
    const std::vector<std::vector<Integer>>& rows, std::size_t width, std::uint64_t p) {
  const std::size_t m = rows.size();
  std::vector<std::vector<std::uint32_t>> aug(m);
  for (std::size_t i = 0; i < m; ++i) {
    aug[i] = reduce_row(rows[i], p);
    aug[i].resize(width + m, 0);
    aug[i][width + i] = 1;
  }
  const std::size_t r = echelon_mod(aug, width, p);
  std::vector<std::vector<std::uint32_t>> null;
  for (std::size_t i = r; i < m; ++i) null.emplace_back(aug[i].begin() + width, aug[i].end());
  // Reduced echelon form so that pivots are exclusive.
  const std::size_t k = echelon_mod(null, m, p);
  null.resize(k);
  for (std::size_t i = k; i-- > 0;) {
    std::size_t c = 0;
    while (null[i][c] == 0) ++c;
    const std::uint64_t inv = inv_mod(null[i][c], p);
    for (auto& x : null[i]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t h = 0; h < i; ++h) {
      const std::uint64_t f = (p - null[h][c]) % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < m; ++j)
        null[h][j] = static_cast<std::uint32_t>((null[h][j] + f * null[i][j]) % p);
    }
  }
  return null;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> left_nullspace_mod_prime(const IntMatrix& b,
                                                                std::uint64_t p) {
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < b.rows(); ++i) rows.push_back(b.row_vector(i));
  return left_nullspace_rows(rows, b.cols(), p);
}

void saturate_at_prime(std::vector<std::vector<Integer>>& basis, std::uint64_t ell) {
  if (basis.empty()) return;
  const std::size_t width = basis.front().size();
  const Integer l(static_cast<unsigned long>(ell));
  for (;;) {
    auto null = left_nullspace_rows(basis, width, ell);
    if (null.empty()) return;
    std::vector<std::pair<std::size_t, std::vector<Integer>>> updates;
    for (const auto& c : null) {
      std::size_t pivot = 0;
      while (c[pivot] == 0) ++pivot;
      std::vector<Integer> v(width);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const unsigned long ci = c[i];
        for (std::size_t j = 0; j < width; ++j)
          if (sgn(basis[i][j]) != 0) mpz_addmul_ui(v[j].get_mpz_t(), basis[i][j].get_mpz_t(), ci);
      }
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), l.get_mpz_t());
      updates.emplace_back(pivot, std::move(v));
    }
    for (auto& [pivot, v] : updates) basis[pivot] = std::move(v);
  }
}

}  // namespace glconj
