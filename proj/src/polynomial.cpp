#include "glconj/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace glconj {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::linear_root(const Integer& root) {
  return IntPolynomial({Integer(-root), Integer(1)});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntMatrix IntPolynomial::evaluate(const IntMatrix& x) const {
  if (!x.square()) throw ShapeError("polynomial evaluated at non-square matrix");
  const std::size_t n = x.rows();
  IntMatrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Integer& c = coeffs_[d];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    if (mag != 1 || d == 0) os << mag.get_str();
    if (d >= 1) os << "t";
    if (d >= 2) os << "^" << d;
    first = false;
  }
  return os.str();
}

IntPolynomial minimal_polynomial(const IntMatrix& x) {
  if (!x.square()) throw ShapeError("minimal polynomial of non-square matrix");
  const std::size_t n = x.rows();
  const std::size_t len = n * n;
  // Echelon rows of the powers seen so far, with the combination of powers
  // each row represents.
  struct Row {
    std::vector<mpq_class> v;
    std::size_t pivot;
    std::vector<mpq_class> combo;
  };
  std::vector<Row> basis;
  IntMatrix power = IntMatrix::identity(n);
  for (std::size_t d = 0; d <= n; ++d) {
    std::vector<mpq_class> v(len);
    for (std::size_t k = 0; k < len; ++k) v[k] = power.entries()[k];
    std::vector<mpq_class> combo(d + 1);
    combo[d] = 1;
    for (const auto& r : basis) {
      if (sgn(v[r.pivot]) == 0) continue;
      const mpq_class f = v[r.pivot] / r.v[r.pivot];
      for (std::size_t k = 0; k < len; ++k)
        if (sgn(r.v[k]) != 0) v[k] -= f * r.v[k];
      for (std::size_t k = 0; k < r.combo.size(); ++k) combo[k] -= f * r.combo[k];
    }
    std::size_t pivot = 0;
    while (pivot < len && sgn(v[pivot]) == 0) ++pivot;
    if (pivot == len) {
      std::vector<Integer> coeffs(d + 1);
      for (std::size_t k = 0; k <= d; ++k) {
        if (combo[k].get_den() != 1) throw Error("minimal polynomial: non-integral coefficient");
        coeffs[k] = combo[k].get_num();
      }
      return IntPolynomial(std::move(coeffs));
    }
    basis.push_back({std::move(v), pivot, std::move(combo)});
    power = power * x;
  }
  throw Error("minimal polynomial: no dependency found (unreachable)");
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Characteristic polynomial of x mod p, low coefficient first (length n + 1).
std::vector<u64> charpoly_mod(const IntMatrix& x, u64 p) {
  const std::size_t n = x.rows();
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = mpz_fdiv_ui(x(i, j).get_mpz_t(), p);
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const u64 inv = invmod(h[j + 1][j], p);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h[r][j] == 0) continue;
      const u64 u = mulmod(h[r][j], inv, p);
      for (std::size_t c = 0; c < n; ++c)
        h[r][c] = (h[r][c] + p - mulmod(u, h[j + 1][c], p)) % p;
      for (std::size_t c = 0; c < n; ++c) h[c][j + 1] = (h[c][j + 1] + mulmod(u, h[c][r], p)) % p;
    }
  }
  // chi_m(t) = (t - h_mm) chi_{m-1}(t) - sum_i h_im (prod_{l=i+1}^{m} h_{l,l-1}) chi_{i-1}(t)
  std::vector<std::vector<u64>> chi(n + 1);
  chi[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> c(m + 1, 0);
    const auto& prev = chi[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      c[k + 1] = (c[k + 1] + prev[k]) % p;
      c[k] = (c[k] + p - mulmod(h[m - 1][m - 1], prev[k], p)) % p;
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = mulmod(prod, h[i + 1][i], p);
      if (prod == 0) break;
      const u64 f = mulmod(h[i][m - 1], prod, p);
      if (f == 0) continue;
      const auto& lower = chi[i];
      for (std::size_t k = 0; k < lower.size(); ++k) c[k] = (c[k] + p - mulmod(f, lower[k], p)) % p;
    }
    chi[m] = std::move(c);
  }
  return chi[n];
}

}  // namespace

Integer spectral_bound(const IntMatrix& x) {
  Integer best = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    Integer s = 0;
    for (const auto& e : x.row(i)) s += abs(e);
    if (s > best) best = s;
  }
  return best;
}

IntPolynomial characteristic_polynomial(const IntMatrix& x) {
  if (!x.square()) throw ShapeError("characteristic polynomial of non-square matrix");
  const std::size_t n = x.rows();
  // |coefficient| <= (1 + B)^n where B bounds every eigenvalue.
  Integer bound;
  mpz_pow_ui(bound.get_mpz_t(), Integer(spectral_bound(x) + 1).get_mpz_t(), n);
  bound *= 2;
  std::vector<Integer> coeffs(n + 1);
  Integer modulus = 1;
  u64 p = (u64(1) << 31);
  while (modulus <= bound) {
    do {
      --p;
    } while (!mpz_probab_prime_p(Integer(static_cast<unsigned long>(p)).get_mpz_t(), 30));
    const auto cp = charpoly_mod(x, p);
    const Integer pz(static_cast<unsigned long>(p));
    // CRT: c = c + modulus * ((r - c) * modulus^{-1} mod p)
    Integer minv;
    mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t k = 0; k <= n; ++k) {
      Integer diff = Integer(static_cast<unsigned long>(cp[k])) - coeffs[k];
      diff *= minv;
      mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), pz.get_mpz_t());
      coeffs[k] += modulus * diff;
    }
    modulus *= pz;
  }
  const Integer half = modulus / 2;
  for (auto& c : coeffs)
    if (c > half) c -= modulus;
  return IntPolynomial(std::move(coeffs));
}

std::vector<Integer> integer_roots(const IntPolynomial& f, const Integer& bound) {
  if (f.is_zero()) throw Error("integer_roots of the zero polynomial");
  const long limit = 20000000;
  if (bound > limit) throw Error("integer_roots: eigenvalue bound " + bound.get_str() + " too large");
  const long b = bound.get_si();
  // Filter candidates modulo a 61-bit prime before exact evaluation.
  const u64 p = 2305843009213693951ULL;
  std::vector<u64> cm;
  for (const auto& c : f.coefficients()) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), Integer("2305843009213693951").get_mpz_t());
    cm.push_back(mpz_get_ui(r.get_mpz_t()));
  }
  std::vector<Integer> roots;
  for (long a = -b; a <= b; ++a) {
    const u64 am = a >= 0 ? static_cast<u64>(a) : p - static_cast<u64>(-a);
    u64 acc = 0;
    for (auto it = cm.rbegin(); it != cm.rend(); ++it) acc = (mulmod(acc, am, p) + *it) % p;
    if (acc != 0) continue;
    if (sgn(f.evaluate(Integer(a))) == 0) roots.emplace_back(a);
  }
  return roots;
}

}  // namespace glconj
