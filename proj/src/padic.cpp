#include "glconj/padic.hpp"

#include <sstream>

namespace glconj {

UnramifiedRing::UnramifiedRing(const GaloisField& field, std::uint32_t precision)
    : field_(field), precision_(precision), pn_(1) {
  if (precision == 0) throw DomainError("precision must be positive");
  for (std::uint32_t i = 0; i < precision; ++i) {
    pn_ *= field.p();
    if (pn_ >= (std::int64_t{1} << 31)) throw DomainError("p^N too large");
  }
}

UnramifiedRing::Element UnramifiedRing::from_integer(std::int64_t a) const {
  Element e = zero();
  e[0] = ((a % pn_) + pn_) % pn_;
  return e;
}

UnramifiedRing::Element UnramifiedRing::lift(std::uint32_t x) const {
  const auto d = field_.digits(x);
  return Element(d.begin(), d.end());
}

std::uint32_t UnramifiedRing::reduce(const Element& a) const {
  std::vector<std::uint32_t> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = static_cast<std::uint32_t>(a[i] % field_.p());
  return field_.from_digits(d);
}

UnramifiedRing::Element UnramifiedRing::add(const Element& a, const Element& b) const {
  Element c(degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % pn_;
  return c;
}

UnramifiedRing::Element UnramifiedRing::mul(const Element& a, const Element& b) const {
  const std::size_t d = degree();
  std::vector<std::int64_t> r(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % pn_;
  const auto& m = field_.modulus();
  for (std::size_t top = 2 * d - 1; top-- > d;) {
    const std::int64_t c = r[top];
    if (c == 0) continue;
    for (std::size_t i = 0; i < d; ++i)
      r[top - d + i] = ((r[top - d + i] - c * static_cast<std::int64_t>(m[i])) % pn_ + pn_) % pn_;
    r[top] = 0;
  }
  return Element(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d));
}

UnramifiedRing::Element UnramifiedRing::pow(Element a, std::uint64_t e) const {
  Element r = from_integer(1);
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint32_t> UnramifiedRing::valuation(const Element& a) const {
  std::optional<std::uint32_t> best;
  for (auto c : a) {
    if (c == 0) continue;
    std::uint32_t v = 0;
    while (c % field_.p() == 0) {
      c /= field_.p();
      ++v;
    }
    if (!best || v < *best) best = v;
  }
  return best;
}

std::string UnramifiedRing::to_string(const Element& a) const {
  std::ostringstream os;
  os << a[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    os << " + " << a[i] << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UnramifiedRing::Element teichmuller_from(const UnramifiedRing& ring, UnramifiedRing::Element z) {
  if (ring.reduce(z) == 0) throw ZeroInput("Teichmuller lift of zero");
  const std::uint64_t q = ring.field().q();
  for (std::uint32_t it = 0; it < ring.precision() + 8; ++it) {
    auto next = ring.pow(z, q);
    if (next == z) return z;
    z = std::move(next);
  }
  throw Error("Teichmuller iteration did not stabilize");
}

UnramifiedRing::Element teichmuller(const UnramifiedRing& ring, std::uint32_t x) {
  if (x == 0) throw ZeroInput("Teichmuller lift of zero");
  return teichmuller_from(ring, ring.lift(x));
}

std::vector<UnramifiedRing::Element> teichmuller_table(const UnramifiedRing& ring) {
  const std::uint32_t n = ring.field().q() - 1;
  const auto w = teichmuller(ring, ring.field().beta());
  std::vector<UnramifiedRing::Element> table;
  table.reserve(n);
  table.push_back(ring.from_integer(1));
  for (std::uint32_t i = 1; i < n; ++i) table.push_back(ring.mul(table.back(), w));
  return table;
}

JacobiSumRecord jacobi_sum(const UnramifiedRing& ring,
                           const std::vector<UnramifiedRing::Element>& table, std::uint64_t j) {
  const GaloisField& f = ring.field();
  const std::uint64_t n = f.q() - 1;
  const std::uint64_t k = n / 2;
  JacobiSumRecord rec;
  rec.j = j;
  rec.alpha = ring.zero();
  const std::uint64_t neg_j = (n - j % n) % n;
  for (std::uint32_t x = 2; x < f.q(); ++x) {
    const std::uint32_t y = f.sub(1, x);
    if (y == 0) continue;
    const std::uint64_t e = (neg_j * f.log(x) + k * f.log(y)) % n;
    rec.alpha = ring.add(rec.alpha, table[e]);
  }
  const auto v = ring.valuation(rec.alpha);
  if (!v)
    throw PrecisionExhausted("alpha_" + std::to_string(j) + " vanishes modulo p^" +
                             std::to_string(ring.precision()));
  rec.valuation = *v;
  if (j >= 1 && j < k) rec.c_j = c_of_j(j, f.p());
  return rec;
}

JacobiSumRecord jacobi_sum(const UnramifiedRing& ring, std::uint64_t j) {
  return jacobi_sum(ring, teichmuller_table(ring), j);
}

std::uint32_t digit_sum(std::int64_t j, std::uint32_t p) {
  const std::int64_t p2 = static_cast<std::int64_t>(p) * p;
  const std::int64_t r = ((j % p2) + p2) % p2;
  return static_cast<std::uint32_t>(r / p + r % p);
}

std::uint32_t c_of_j(std::uint64_t j, std::uint32_t p) {
  const std::int64_t k = (static_cast<std::int64_t>(p) * p - 1) / 2;
  const std::int64_t jj = static_cast<std::int64_t>(j);
  const std::int64_t num = static_cast<std::int64_t>(digit_sum(jj, p)) + digit_sum(k, p) -
                           digit_sum(jj + k, p);
  if (num < 0 || num % (p - 1) != 0) throw Error("digit formula is not integral");
  return static_cast<std::uint32_t>(num / (p - 1));
}

CaseCounts count_cases(std::uint32_t p) {
  const std::uint64_t k = (static_cast<std::uint64_t>(p) * p - 1) / 2;
  CaseCounts c;
  for (std::uint64_t j = 1; j < k; ++j) {
    const auto v = c_of_j(j, p);
    if (v == 0)
      ++c.c0;
    else if (v == 1)
      ++c.c1;
    else
      throw Error("c(j) outside {0, 1}");
  }
  return c;
}

JacobiReport jacobi_report(std::uint32_t p, std::uint32_t precision) {
  const UnramifiedRing ring(field_build(p, 2), precision);
  const auto table = teichmuller_table(ring);
  const std::uint64_t k = (ring.field().q() - 1) / 2;
  const auto p2 = ring.from_integer(static_cast<std::int64_t>(p) * p);
  JacobiReport rep;
  rep.p = p;
  rep.precision = precision;
  rep.valuations_match = true;
  rep.products_match = true;
  for (std::uint64_t j = 1; j < k; ++j) {
    auto rec = jacobi_sum(ring, table, j);
    const auto partner = jacobi_sum(ring, table, j + k);
    if (!(ring.mul(rec.alpha, partner.alpha) == p2)) rep.products_match = false;
    if (rec.valuation != *rec.c_j) rep.valuations_match = false;
    rep.records.push_back(std::move(rec));
  }
  rep.counts = count_cases(p);
  const std::size_t h = (p + 1) / 2, l = (p - 1) / 2;
  rep.counts_match = rep.counts.c0 == h * h - 2 && rep.counts.c1 == l * l &&
                     rep.counts.c0 + rep.counts.c1 == k - 1;
  return rep;
}

}  // namespace glconj
