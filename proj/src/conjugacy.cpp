#include "glconj/conjugacy.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "glconj/linalg.hpp"
#include "glconj/polynomial.hpp"

namespace glconj {

namespace {

using ModVec = std::vector<std::uint32_t>;

constexpr std::uint64_t kFilterPrime = 2147483647;  // 2^31 - 1

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Determinant of a row-major n x n matrix over Z/p, p prime.
std::uint64_t det_mod_flat(ModVec m, std::size_t n, std::uint64_t p) {
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
      det = (p - det) % p;
    }
    det = det * m[c * n + c] % p;
    const std::uint64_t inv = inv_mod(m[c * n + c], p);
    for (std::size_t i = c + 1; i < n; ++i) {
      const std::uint64_t f = m[i * n + c] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j)
        m[i * n + j] = static_cast<std::uint32_t>((m[i * n + j] + (p - f) * m[c * n + j]) % p);
    }
  }
  return det;
}

ModVec reduce_matrix(const IntMatrix& a, std::uint64_t p) {
  ModVec out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint32_t>(mpz_fdiv_ui(a.entries()[i].get_mpz_t(), p));
  return out;
}

void add_scaled(ModVec& acc, const ModVec& v, std::uint64_t c, std::uint64_t p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (v[i]) acc[i] = static_cast<std::uint32_t>((acc[i] + c * v[i]) % p);
}

std::vector<std::uint64_t> prime_factors(Integer n) {
  n = abs(n);
  std::vector<std::uint64_t> out;
  for (unsigned long d = 2; Integer(d) * d <= n; ++d) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), d)) continue;
    out.push_back(d);
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
  }
  if (n > 1) {
    if (!n.fits_ulong_p()) throw Error("prime factor too large: " + n.get_str());
    out.push_back(n.get_ui());
  }
  return out;
}

IntMatrix shifted(const IntMatrix& x, const Integer& a) {
  IntMatrix m = x;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= a;
  return m;
}

IntertwinerLattice kronecker_lattice(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t n = x.rows();
  IntMatrix k(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t row = a * n + b;
      for (std::size_t c = 0; c < n; ++c) {
        k(row, a * n + c) += x(c, b);
        k(row, c * n + b) -= y(a, c);
      }
    }
  IntertwinerLattice out{n, x, y, {}};
  const LatticeBasis kb = kernel_basis(k);
  if (kb.rank() == 0) return out;
  const HermiteForm h = hnf(kb.as_rows());
  for (std::size_t i = 0; i < h.rank; ++i) out.basis.push_back(unflatten(h.H.row(i), n, n));
  return out;
}

IntertwinerLattice eigenspace_lattice(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t n = x.rows();
  const SplitSpectrum s = split_spectrum(x);
  std::vector<std::vector<Integer>> gens;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const LatticeBasis v = kernel_basis(shifted(y, s.eigenvalues[i]));
    const LatticeBasis w = kernel_basis(shifted(x, s.eigenvalues[i]).transpose());
    for (const auto& col : v.vectors)
      for (const auto& row : w.vectors) {
        std::vector<Integer> t(n * n);
        for (std::size_t r = 0; r < n; ++r)
          if (sgn(col[r]) != 0)
            for (std::size_t c = 0; c < n; ++c) t[r * n + c] = col[r] * row[c];
        gens.push_back(std::move(t));
      }
  }
  // lcm(q_i) C(X, Y) lies in the span of the outer products.
  Integer l = 1;
  for (const auto& q : s.q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_mpz_t());
  for (auto ell : prime_factors(l)) saturate_at_prime(gens, ell);
  IntertwinerLattice out{n, x, y, {}};
  for (const auto& g : gens) out.basis.push_back(unflatten(g, n, n));
  return out;
}

}  // namespace

IntMatrix IntertwinerLattice::combination(const std::vector<Integer>& coeffs) const {
  IntMatrix t(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    auto& te = t.entries();
    const auto& be = basis[i].entries();
    for (std::size_t k = 0; k < te.size(); ++k)
      if (sgn(be[k]) != 0) mpz_addmul(te[k].get_mpz_t(), be[k].get_mpz_t(), coeffs[i].get_mpz_t());
  }
  return t;
}

IntertwinerLattice intertwiner_lattice(const IntMatrix& x, const IntMatrix& y,
                                       IntertwinerMethod method) {
  if (!x.square() || !y.square() || x.rows() != y.rows())
    throw ShapeError("intertwiner_lattice: X and Y must be square of equal size");
  switch (method) {
    case IntertwinerMethod::Kronecker:
      return kronecker_lattice(x, y);
    case IntertwinerMethod::Eigenspace:
      return eigenspace_lattice(x, y);
    case IntertwinerMethod::Automatic:
      break;
  }
  if (x.rows() <= 10) return kronecker_lattice(x, y);
  try {
    return eigenspace_lattice(x, y);
  } catch (const NotSplit&) {
    return kronecker_lattice(x, y);
  }
}

bool verify_conjugator(const IntMatrix& t, const IntMatrix& x, const IntMatrix& y,
                       std::optional<std::uint64_t> prime) {
  if (!t.square() || !x.square() || !y.square() || t.rows() != x.rows() || x.rows() != y.rows())
    return false;
  if (!(t * x == y * t)) return false;
  const Integer d = det(t);
  if (!prime) return d == 1 || d == -1;
  return mpz_fdiv_ui(d.get_mpz_t(), *prime) != 0;
}

std::vector<std::uint64_t> relevant_primes(const SplitSpectrum& spectrum) {
  std::set<std::uint64_t> ps;
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    for (std::size_t j = i + 1; j < spectrum.size(); ++j)
      for (auto p : prime_factors(spectrum.eigenvalues[i] - spectrum.eigenvalues[j])) ps.insert(p);
  return {ps.begin(), ps.end()};
}

std::string to_string(LocalStatus s) {
  switch (s) {
    case LocalStatus::Pass:
      return "PASS";
    case LocalStatus::Fail:
      return "FAIL";
    case LocalStatus::Undecided:
      return "UNDECIDED";
  }
  return "UNDECIDED";
}

std::string to_string(LocalMethod m) {
  switch (m) {
    case LocalMethod::Sampled:
      return "sampled";
    case LocalMethod::Exhaustive:
      return "exhaustive";
    case LocalMethod::Supplied:
      return "supplied";
  }
  return "sampled";
}

LocalVerdict local_test(const IntertwinerLattice& lattice, std::uint64_t p, std::uint64_t budget,
                        std::uint64_t seed) {
  if (p < 2 || p >= (1ull << 31))
    throw Error("local_test: prime out of range");
  LocalVerdict v;
  v.prime = p;
  const std::size_t n = lattice.n, r = lattice.rank();
  std::vector<ModVec> b;
  for (const auto& m : lattice.basis) b.push_back(reduce_matrix(m, p));

  auto accept = [&](const std::vector<std::uint64_t>& c) {
    std::vector<Integer> coeffs(c.begin(), c.end());
    IntMatrix t = lattice.combination(coeffs);
    if (!verify_conjugator(t, lattice.X, lattice.Y, p)) return false;
    v.status = LocalStatus::Pass;
    v.certificate = std::move(t);
    return true;
  };
  auto unit = [&](std::size_t i, std::size_t j, std::uint64_t cj) {
    std::vector<std::uint64_t> c(r, 0);
    c[i] = 1;
    if (j < r) c[j] = cj;
    return c;
  };

  for (std::size_t i = 0; i < r; ++i) {
    ++v.trials;
    if (det_mod_flat(b[i], n, p) != 0 && accept(unit(i, r, 0))) return v;
  }
  if (r <= 64)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        for (std::uint64_t cj : {std::uint64_t{1}, p - 1}) {
          ModVec acc = b[i];
          add_scaled(acc, b[j], cj, p);
          ++v.trials;
          if (det_mod_flat(acc, n, p) != 0 && accept(unit(i, j, cj))) return v;
        }

  // p^r <= 2^20
  bool small = true;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r && small; ++i) {
    total *= p;
    if (total > (1ull << 20)) small = false;
  }
  if (small) {
    v.method = LocalMethod::Exhaustive;
    std::vector<std::uint64_t> digits(r, 0);
    ModVec acc(n * n, 0);
    for (std::uint64_t step = 1; step < total; ++step) {
      for (std::size_t i = 0; i < r; ++i) {
        add_scaled(acc, b[i], 1, p);
        if (++digits[i] < p) break;
        digits[i] = 0;
      }
      ++v.trials;
      if (det_mod_flat(acc, n, p) != 0 && accept(digits)) return v;
    }
    v.status = LocalStatus::Fail;
    return v;
  }

  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + p);
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  std::vector<std::uint64_t> c(r);
  for (std::uint64_t t = 0; t < budget; ++t) {
    std::vector<std::uint64_t> acc(n * n, 0);
    for (std::size_t i = 0; i < r; ++i) {
      c[i] = coef(rng);
      if (c[i] == 0) continue;
      for (std::size_t k = 0; k < acc.size(); ++k)
        if (b[i][k]) acc[k] = (acc[k] + c[i] * b[i][k]) % p;
    }
    ++v.trials;
    if (det_mod_flat(ModVec(acc.begin(), acc.end()), n, p) != 0 && accept(c)) return v;
  }
  return v;
}

LocalVerdict local_test(const IntMatrix& x, const IntMatrix& y, std::uint64_t p,
                        std::uint64_t budget, std::uint64_t seed) {
  if (!(characteristic_polynomial(x) == characteristic_polynomial(y))) {
    LocalVerdict v;
    v.prime = p;
    v.status = LocalStatus::Fail;
    v.method = LocalMethod::Exhaustive;
    return v;
  }
  return local_test(intertwiner_lattice(x, y), p, budget, seed);
}

LocalVerdict supplied_local(const IntMatrix& t, const IntMatrix& x, const IntMatrix& y,
                            std::uint64_t p) {
  LocalVerdict v;
  v.prime = p;
  v.method = LocalMethod::Supplied;
  v.trials = 1;
  if (verify_conjugator(t, x, y, p)) {
    v.status = LocalStatus::Pass;
    v.certificate = t;
  }
  return v;
}

bool is_adjacency_matrix(const IntMatrix& a) {
  if (!a.square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (sgn(a(i, i)) != 0) return false;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != a(j, i)) return false;
      if (a(i, j) != 0 && a(i, j) != 1) return false;
    }
  }
  return true;
}

std::optional<IntMatrix> permutation_conjugator(const IntMatrix& x, const IntMatrix& y,
                                                std::uint64_t node_budget) {
  if (!is_adjacency_matrix(x) || !is_adjacency_matrix(y) || x.rows() != y.rows())
    return std::nullopt;
  const std::size_t n = x.rows();
  std::vector<std::vector<bool>> ax(n, std::vector<bool>(n)), ay = ax;
  std::vector<std::size_t> dx(n, 0), dy(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ax[i][j] = x(i, j) == 1;
      ay[i][j] = y(i, j) == 1;
      dx[i] += ax[i][j];
      dy[i] += ay[i][j];
    }
  {
    auto sx = dx, sy = dy;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return std::nullopt;
  }
  // Breadth-first order keeps each new vertex adjacent to assigned ones.
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    order.push_back(s);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h)
      for (std::size_t w = 0; w < n; ++w)
        if (ax[order[h]][w] && !seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
  }
  std::vector<std::size_t> sigma(n, n);
  std::vector<bool> used(n, false);
  std::uint64_t nodes = 0;
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) return true;
    if (++nodes > node_budget) return false;
    const std::size_t v = order[k];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || dy[w] != dx[v]) continue;
      bool ok = true;
      for (std::size_t h = 0; h < k && ok; ++h) {
        const std::size_t u = order[h];
        if (ax[v][u] != ay[w][sigma[u]]) ok = false;
      }
      if (!ok) continue;
      sigma[v] = w;
      used[w] = true;
      if (extend(k + 1)) return true;
      used[w] = false;
      sigma[v] = n;
      if (nodes > node_budget) return false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  IntMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) t(sigma[i], i) = 1;
  if (!verify_conjugator(t, x, y)) return std::nullopt;
  return t;
}

std::optional<IntMatrix> conjugator_search(const IntertwinerLattice& lattice, std::uint64_t budget,
                                           std::uint64_t seed) {
  const std::size_t n = lattice.n, r = lattice.rank();
  if (r == 0) return std::nullopt;
  if (lattice.X == lattice.Y) return IntMatrix::identity(n);
  if (is_adjacency_matrix(lattice.X) && is_adjacency_matrix(lattice.Y))
    if (auto t = permutation_conjugator(lattice.X, lattice.Y, budget)) return t;

  std::vector<IntMatrix> basis = lattice.basis;
  if (n * n <= 400 && r <= 120) {
    LatticeBasis lb{n * n, {}};
    for (const auto& m : basis) lb.vectors.push_back(flatten(m));
    lb = lll_reduce(lb);
    basis.clear();
    for (const auto& v : lb.vectors) basis.push_back(unflatten(v, n, n));
  }
  const std::uint64_t p = kFilterPrime;
  std::vector<ModVec> b;
  for (const auto& m : basis) b.push_back(reduce_matrix(m, p));

  std::uint64_t trials = 0;
  auto try_coeffs = [&](const std::vector<long>& c) -> std::optional<IntMatrix> {
    ++trials;
    ModVec acc(n * n, 0);
    for (std::size_t i = 0; i < r; ++i)
      if (c[i] != 0) add_scaled(acc, b[i], static_cast<std::uint64_t>((c[i] % long(p) + long(p)) % long(p)), p);
    const std::uint64_t d = det_mod_flat(std::move(acc), n, p);
    if (d != 1 && d != p - 1) return std::nullopt;
    IntMatrix t(n, n);
    for (std::size_t i = 0; i < r; ++i)
      if (c[i] != 0) t += Integer(c[i]) * basis[i];
    if (verify_conjugator(t, lattice.X, lattice.Y)) return t;
    return std::nullopt;
  };

  std::vector<long> c(r, 0);
  for (std::size_t i = 0; i < r && trials < budget; ++i) {
    c[i] = 1;
    if (auto t = try_coeffs(c)) return t;
    c[i] = 0;
  }
  for (std::size_t i = 0; i < r && trials < budget; ++i)
    for (std::size_t j = i + 1; j < r && trials < budget; ++j)
      for (long s : {1L, -1L}) {
        c[i] = 1;
        c[j] = s;
        auto t = try_coeffs(c);
        c[i] = c[j] = 0;
        if (t) return t;
      }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pos(0, r - 1);
  std::uniform_int_distribution<std::size_t> count(1, std::min<std::size_t>(r, 6));
  const std::uint64_t half = trials + (budget > trials ? (budget - trials) / 2 : 0);
  while (trials < budget) {
    const long span = trials < half ? 1 : 2;
    std::uniform_int_distribution<long> val(-span, span);
    std::fill(c.begin(), c.end(), 0);
    for (std::size_t k = count(rng); k > 0; --k) {
      long v = 0;
      while (v == 0) v = val(rng);
      c[pos(rng)] = v;
    }
    if (auto t = try_coeffs(c)) return t;
  }
  return std::nullopt;
}

IntMatrix sl_lift(const IntMatrix& m, const Integer& q) {
  if (!m.square()) throw ShapeError("sl_lift: matrix is not square");
  if (q < 2) throw Error("sl_lift: modulus must be at least 2");
  const std::size_t n = m.rows();
  IntMatrix a = mod_reduce(m, q);
  Integer d = det(a);
  if (!mpz_divisible_p(Integer(d - 1).get_mpz_t(), q.get_mpz_t())) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t());
    throw DetNotOne("determinant is " + r.get_str() + " mod " + q.get_str());
  }
  if (d == 1) return a;
  IntMatrix centered = a;
  for (auto& e : centered.entries())
    if (2 * e > q) e -= q;
  if (det(centered) == 1) return centered;

  struct Op {
    std::size_t i, j;
    Integer c;  // row_i += c row_j
  };
  std::vector<Op> ops;
  auto apply = [&](std::size_t i, std::size_t j, Integer c) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
    if (sgn(c) == 0) return;
    a.add_row_multiple(i, j, c);
    for (auto& e : a.row(i)) mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
    ops.push_back({i, j, c});
  };
  // (r_i, r_j) -> (r_j, -r_i)
  auto signed_swap = [&](std::size_t i, std::size_t j) {
    apply(i, j, 1);
    apply(j, i, -1);
    apply(i, j, 1);
  };

  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = k; i < n; ++i)
        if (sgn(a(i, k)) != 0 && (best == n || a(i, k) < a(best, k))) best = i;
      if (best == n) throw Error("sl_lift: singular column");
      if (best != k) signed_swap(k, best);
      bool clear = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (sgn(a(i, k)) == 0) continue;
        apply(i, k, -(a(i, k) / a(k, k)));
        if (sgn(a(i, k)) != 0) clear = false;
      }
      if (clear) break;
    }
    const Integer g = a(k, k);
    if (g != 1) {
      if (k + 1 == n) throw Error("sl_lift: determinant check failed");
      Integer u;
      if (mpz_invert(u.get_mpz_t(), g.get_mpz_t(), q.get_mpz_t()) == 0)
        throw Error("sl_lift: pivot is not a unit");
      apply(k + 1, k, u);
      apply(k, k + 1, -(g - 1));
      apply(k + 1, k, -1);
    }
    for (std::size_t i = 0; i < k; ++i)
      if (sgn(a(i, k)) != 0) apply(i, k, -a(i, k));
  }

  IntMatrix lift = IntMatrix::identity(n);
  for (std::size_t t = ops.size(); t-- > 0;) {
    Integer c = ops[t].c;
    if (2 * c > q) c -= q;
    lift.add_row_multiple(ops[t].i, ops[t].j, Integer(-c));
  }
  if (det(lift) != 1 || !(mod_reduce(lift, q) == mod_reduce(m, q)))
    throw Error("sl_lift: lift failed verification");
  return lift;
}

BinaryQuadraticForm bqf_from_lattice(const IntertwinerLattice& lattice) {
  if (lattice.n != 2 || lattice.rank() != 2)
    throw RankMismatch("determinant form needs a rank-2 lattice of 2x2 matrices (n = " +
                       std::to_string(lattice.n) + ", rank = " + std::to_string(lattice.rank()) +
                       ")");
  const IntMatrix &b1 = lattice.basis[0], &b2 = lattice.basis[1];
  BinaryQuadraticForm f;
  f.a = det(b1);
  f.c = det(b2);
  f.b = det(b1 + b2) - f.a - f.c;
  return f;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Conjugate:
      return "CONJUGATE";
    case VerdictStatus::NotConjugate:
      return "NOT_CONJUGATE";
    case VerdictStatus::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::ExplicitConjugator:
      return "explicit-conjugator";
    case VerdictReason::TheoremLocalPasses:
      return "theorem+local-passes";
    case VerdictReason::CharpolyMismatch:
      return "charpoly-mismatch";
    case VerdictReason::LocalObstruction:
      return "local-obstruction";
    case VerdictReason::BqfCertificate:
      return "bqf-certificate";
    case VerdictReason::AssumptionUnverified:
      return "assumption-unverified";
  }
  return "assumption-unverified";
}

namespace {

Verdict finish(Verdict v, VerdictStatus s, VerdictReason r) {
  v.status = s;
  v.reason = r;
  return v;
}

// Exact 2x2 decision through the determinant form.
Verdict decide_by_form(Verdict v, const IntertwinerLattice& lattice) {
  BqfCertificate cert;
  cert.form = bqf_from_lattice(lattice);
  cert.representation = bqf_represents_unit(cert.form);
  if (cert.representation.represents) {
    const auto& [x, y] = *cert.representation.witness;
    IntMatrix t = lattice.combination({x, y});
    if (!verify_conjugator(t, lattice.X, lattice.Y)) throw Error("form witness failed to verify");
    v.conjugator = std::move(t);
    v.bqf = std::move(cert);
    return finish(std::move(v), VerdictStatus::Conjugate, VerdictReason::ExplicitConjugator);
  }
  v.bqf = std::move(cert);
  return finish(std::move(v), VerdictStatus::NotConjugate, VerdictReason::BqfCertificate);
}

}  // namespace

Verdict decide(const IntMatrix& x, const IntMatrix& y, const DecideOptions& options) {
  if (!x.square() || !y.square() || x.rows() != y.rows())
    throw ShapeError("decide: X and Y must be square of equal size");
  const std::size_t n = x.rows();
  Verdict v;
  if (x == y) {
    v.conjugator = IntMatrix::identity(n);
    return finish(std::move(v), VerdictStatus::Conjugate, VerdictReason::ExplicitConjugator);
  }
  if (!(characteristic_polynomial(x) == characteristic_polynomial(y))) {
    v.detail = "characteristic polynomials differ";
    return finish(std::move(v), VerdictStatus::NotConjugate, VerdictReason::CharpolyMismatch);
  }
  if (!(minimal_polynomial(x) == minimal_polynomial(y))) {
    v.detail = "minimal polynomials differ";
    return finish(std::move(v), VerdictStatus::NotConjugate, VerdictReason::CharpolyMismatch);
  }

  std::optional<SplitSpectrum> spectrum;
  try {
    spectrum = split_spectrum(x);
  } catch (const NotSplit& e) {
    if (n != 2) {
      v.unsupported = true;
      v.detail = e.what();
      return finish(std::move(v), VerdictStatus::Unknown, VerdictReason::AssumptionUnverified);
    }
    v.detail = e.what();
    return decide_by_form(std::move(v), intertwiner_lattice(x, y, IntertwinerMethod::Kronecker));
  }

  AssumptionReport rep = check_assumption(*spectrum);
  if (!rep.holds()) {
    AssumptionReport rep_y = check_assumption(y);
    if (rep_y.holds()) {
      rep = std::move(rep_y);
      v.assumption_subject = 'Y';
    }
  }
  const bool holds = rep.holds();
  v.assumption = std::move(rep);

  const IntertwinerLattice lattice = intertwiner_lattice(x, y);
  bool all_pass = true;
  for (auto p : relevant_primes(*spectrum)) {
    v.local.push_back(local_test(lattice, p, options.local_budget, options.seed));
    const auto& lv = v.local.back();
    if (lv.status == LocalStatus::Fail) {
      v.detail = "no element of C(X,Y) is invertible mod " + std::to_string(p);
      return finish(std::move(v), VerdictStatus::NotConjugate, VerdictReason::LocalObstruction);
    }
    if (lv.status != LocalStatus::Pass) all_pass = false;
  }
  if (holds && all_pass) {
    if (n <= options.explicit_up_to)
      v.conjugator = conjugator_search(lattice, options.search_budget, options.seed);
    return finish(std::move(v), VerdictStatus::Conjugate, VerdictReason::TheoremLocalPasses);
  }
  if (n == 2 && lattice.rank() == 2) return decide_by_form(std::move(v), lattice);
  if (auto t = conjugator_search(lattice, options.search_budget, options.seed)) {
    v.conjugator = std::move(t);
    return finish(std::move(v), VerdictStatus::Conjugate, VerdictReason::ExplicitConjugator);
  }
  v.detail = holds ? "some local test was undecided" : "assumption fails and no conjugator found";
  return finish(std::move(v), VerdictStatus::Unknown, VerdictReason::AssumptionUnverified);
}

}  // namespace glconj
