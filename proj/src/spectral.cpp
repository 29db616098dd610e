#include "glconj/spectral.hpp"

#include "glconj/linalg.hpp"

namespace glconj {

IntPolynomial SplitSpectrum::minimal_polynomial() const {
  IntPolynomial mu({Integer(1)});
  for (const auto& a : eigenvalues) mu = mu * IntPolynomial::linear_root(a);
  return mu;
}

namespace {

IntMatrix shifted(const IntMatrix& x, const Integer& a) {
  IntMatrix m = x;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= a;
  return m;
}

}  // namespace

SplitSpectrum split_spectrum(const IntMatrix& x) {
  if (!x.square()) throw ShapeError("split_spectrum: matrix is not square");
  const IntPolynomial mu = minimal_polynomial(x);
  const auto roots = integer_roots(mu, spectral_bound(x));
  if (static_cast<int>(roots.size()) != mu.degree())
    throw NotSplit("minimal polynomial " + mu.to_string() +
                   " does not split into distinct integer linear factors");

  SplitSpectrum s;
  s.n = x.rows();
  s.eigenvalues = roots;
  const std::size_t k = roots.size();
  for (std::size_t i = 0; i < k; ++i) {
    IntMatrix p = IntMatrix::identity(s.n);
    Integer den = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      p = p * shifted(x, roots[j]);
      den *= roots[i] - roots[j];
    }
    Integer g;
    const Integer c = p.content();
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den.get_mpz_t());
    Integer q = abs(den) / g;
    for (auto& e : p.entries()) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    if (sgn(den) < 0) p = -p;
    // e_i is idempotent, so rank(e_i) = trace(e_i) = trace(E_i) / q_i.
    const Integer tr = p.trace();
    if (!mpz_divisible_p(tr.get_mpz_t(), q.get_mpz_t()))
      throw Error("split_spectrum: trace of idempotent not divisible by q");
    s.multiplicities.push_back(Integer(tr / q).get_ui());
    s.E.push_back(std::move(p));
    s.q.push_back(std::move(q));
  }
  return s;
}

AssumptionReport check_assumption(const SplitSpectrum& spectrum) {
  AssumptionReport r;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    IdempotentReport ir;
    ir.eigenvalue = spectrum.eigenvalues[i];
    ir.q = spectrum.q[i];
    ir.smith_exponent = smith_group(spectrum.E[i]).exponent;
    ir.rank = spectrum.multiplicities[i];
    r.per_index.push_back(std::move(ir));
  }
  auto exact = [&](std::size_t i) { return r.per_index[i].smith_exponent == r.per_index[i].q; };
  r.clause_a = true;
  for (std::size_t i = 0; i < r.per_index.size(); ++i) r.clause_a = r.clause_a && exact(i);
  // Several rank-one idempotents may qualify as e_1; the first (smallest
  // eigenvalue) that works is reported.
  for (std::size_t i = 0; i < r.per_index.size() && !r.clause_b; ++i) {
    if (r.per_index[i].rank != 1) continue;
    bool rest = true;
    for (std::size_t j = 0; j < r.per_index.size(); ++j)
      if (j != i && !exact(j)) rest = false;
    if (rest) {
      r.clause_b = true;
      r.witness_index_for_b = i;
    }
  }
  return r;
}

AssumptionReport check_assumption(const IntMatrix& x) { return check_assumption(split_spectrum(x)); }

std::vector<Integer> quotient_invariants(const IntMatrix& e, const Integer& q) {
  const auto d = smith_invariants(e);
  std::vector<Integer> m;
  m.reserve(d.size());
  for (const auto& dj : d) {
    if (!mpz_divisible_p(q.get_mpz_t(), dj.get_mpz_t()))
      throw DivisibilityViolation("abelian invariant " + dj.get_str() + " does not divide " +
                                  q.get_str());
    m.push_back(q / dj);
  }
  return m;
}

bool verify_idempotent_identities(const IntMatrix& x, const SplitSpectrum& s) {
  const std::size_t n = s.n;
  // Common denominator L = lcm(q_i); sum_i (L / q_i) E_i == L I.
  Integer l = 1;
  for (const auto& q : s.q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_mpz_t());
  IntMatrix sum(n, n);
  std::size_t total_rank = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const IntMatrix& ei = s.E[i];
    if (!(x * ei == s.eigenvalues[i] * ei)) return false;
    if (!(ei * ei == s.q[i] * ei)) return false;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i && !(ei * s.E[j]).is_zero()) return false;
    sum += (l / s.q[i]) * ei;
    total_rank += s.multiplicities[i];
  }
  return sum == l * IntMatrix::identity(n) && total_rank == n;
}

}  // namespace glconj
