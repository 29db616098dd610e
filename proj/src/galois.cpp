#include "glconj/galois.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "glconj/linalg.hpp"

namespace glconj {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    r *= b;
    if (r > (1u << 30)) throw DomainError("field too large");
  }
  return static_cast<std::uint32_t>(r);
}

// Multiplies the coefficient vector by x modulo the monic modulus.
void times_x(std::vector<std::uint32_t>& c, const std::vector<std::uint32_t>& m, std::uint32_t p) {
  const std::size_t d = c.size();
  const std::uint32_t top = c[d - 1];
  for (std::size_t i = d - 1; i > 0; --i) c[i] = c[i - 1];
  c[0] = 0;
  if (top == 0) return;
  for (std::size_t i = 0; i < d; ++i) c[i] = static_cast<std::uint32_t>((c[i] + static_cast<std::uint64_t>(p - m[i]) * top) % p);
}

// Order of x in (Z/p)[x]/(m), or 0 if x is not a unit of order dividing q-1.
std::uint64_t order_of_x(const std::vector<std::uint32_t>& m, std::uint32_t p, std::uint32_t q) {
  const std::size_t d = m.size() - 1;
  std::vector<std::uint32_t> c(d, 0), one(d, 0);
  one[0] = 1;
  c = one;
  for (std::uint64_t i = 1; i <= q - 1; ++i) {
    times_x(c, m, p);
    if (c == one) return i;
  }
  return 0;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, std::uint32_t degree, std::vector<std::uint32_t> modulus)
    : p_(p), degree_(degree), q_(ipow(p, degree)), modulus_(std::move(modulus)) {
  if (modulus_.size() != degree_ + 1 || modulus_.back() != 1)
    throw DomainError("modulus must be monic of the stated degree");
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::vector<std::uint32_t> c(degree_, 0);
  c[0] = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    const std::uint32_t idx = from_digits(c);
    if (i > 0 && idx == 1) throw DomainError("x is not primitive modulo " + modulus_string());
    exp_[i] = idx;
    log_[idx] = i;
    times_x(c, modulus_, p_);
  }
  if (from_digits(c) != 1) throw DomainError("x is not primitive modulo " + modulus_string());
}

std::vector<std::uint32_t> GaloisField::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> c(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint32_t GaloisField::from_digits(const std::vector<std::uint32_t>& c) const {
  std::uint32_t a = 0;
  for (std::size_t i = c.size(); i-- > 0;) a = a * p_ + c[i];
  return a;
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t GaloisField::sub(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    out += ((a % p_ + p_ - b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t GaloisField::log(std::uint32_t a) const {
  if (a == 0) throw DomainError("log of zero");
  return log_[a];
}

std::string GaloisField::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = modulus_.size(); d-- > 0;) {
    const std::uint32_t c = modulus_[d];
    if (c == 0) continue;
    if (!first) os << " + ";
    if (c != 1 || d == 0) os << c;
    if (d >= 1) os << "x";
    if (d >= 2) os << "^" << d;
    first = false;
  }
  return os.str();
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  // Trial division by every monic polynomial of degree 1..deg/2.
  const std::size_t n = monic.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    const std::uint32_t count = ipow(p, static_cast<std::uint32_t>(d));
    for (std::uint32_t v = 0; v < count; ++v) {
      std::vector<std::uint32_t> g(d + 1);
      std::uint32_t t = v;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      std::vector<std::int64_t> r(monic.begin(), monic.end());
      for (std::size_t top = n; top >= d; --top) {
        const std::int64_t c = ((r[top] % p) + p) % p;
        if (c != 0)
          for (std::size_t i = 0; i <= d; ++i) r[top - d + i] -= c * g[i];
        if (top == d) break;
      }
      bool zero = true;
      for (std::size_t i = 0; i < d; ++i)
        if (((r[i] % p) + p) % p != 0) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

GaloisField field_build(std::uint32_t p, std::uint32_t degree) {
  if (!is_prime_u32(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p % 4 != 3) throw DomainError("NotThreeModFour: p = " + std::to_string(p));
  if (degree == 0 || degree % 2 != 0) throw DomainError("field degree must be even");
  const std::uint32_t q = ipow(p, degree);
  for (std::uint32_t v = 0; v < q; ++v) {
    std::vector<std::uint32_t> m(degree + 1);
    std::uint32_t t = v;
    for (std::uint32_t i = 0; i < degree; ++i) {
      m[i] = t % p;
      t /= p;
    }
    m[degree] = 1;
    if (m[0] == 0) continue;
    if (order_of_x(m, p, q) == q - 1) return GaloisField(p, degree, std::move(m));
  }
  throw DomainError("no primitive polynomial found");
}

std::array<std::vector<std::uint32_t>, 4> quarter_cosets(const GaloisField& f) {
  std::array<std::vector<std::uint32_t>, 4> cosets;
  for (std::uint32_t i = 0; i + 1 < f.q(); ++i) cosets[i % 4].push_back(f.beta_power(i));
  for (auto& c : cosets) std::sort(c.begin(), c.end());
  return cosets;
}

namespace {

template <typename Pred>
IntMatrix cayley_adjacency(const GaloisField& f, Pred in_connection_set) {
  const std::uint32_t q = f.q();
  IntMatrix a(q, q);
  for (std::uint32_t i = 0; i < q; ++i)
    for (std::uint32_t j = 0; j < q; ++j)
      if (i != j && in_connection_set(f.log(f.sub(i, j)))) a(i, j) = 1;
  return a;
}

}  // namespace

IntMatrix paley_adjacency(const GaloisField& f) {
  return cayley_adjacency(f, [](std::uint32_t l) { return l % 2 == 0; });
}

IntMatrix peisert_adjacency(const GaloisField& f, std::uint64_t generator_exponent) {
  if (generator_exponent % 2 == 0 || std::gcd<std::uint64_t>(generator_exponent, f.q() - 1) != 1)
    throw DomainError("Peisert generator must be a primitive element");
  const std::uint32_t g = static_cast<std::uint32_t>(generator_exponent % 4);
  return cayley_adjacency(f, [g](std::uint32_t l) { return l % 4 == 0 || l % 4 == g; });
}

GraphIdempotents graph_idempotents(const IntMatrix& x, std::uint32_t p) {
  const std::size_t n = x.rows();
  const Integer pz(p);
  const Integer r = (pz - 1) / 2;
  const Integer s = (-pz - 1) / 2;
  const IntMatrix j = IntMatrix::all_ones(n);
  const IntMatrix id = IntMatrix::identity(n);
  GraphIdempotents e;
  e.E1 = j;
  e.E2 = s * j + pz * x - Integer(pz * s) * id;
  e.E3 = r * j - pz * x + Integer(pz * r) * id;
  return e;
}

namespace {

void check_graph_idempotents(const GraphIdempotents& e, std::uint32_t p, const Integer& k,
                             const std::string& which) {
  const Integer p2 = Integer(p) * p;
  const std::array<const IntMatrix*, 3> es{&e.E1, &e.E2, &e.E3};
  const std::array<Integer, 3> ranks{Integer(1), k, k};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(*es[i] * *es[i] == p2 * *es[i]))
      throw Error(which + ": E" + std::to_string(i + 1) + "^2 != p^2 E");
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j && !(*es[i] * *es[j]).is_zero())
        throw Error(which + ": E" + std::to_string(i + 1) + " E" + std::to_string(j + 1) + " != 0");
    // E/p^2 is idempotent, so its rank is its trace.
    if (es[i]->trace() != p2 * ranks[i])
      throw Error(which + ": rank profile mismatch at E" + std::to_string(i + 1));
  }
}

}  // namespace

PaleyPeisertData paley_idempotent_data(std::uint32_t p) {
  const GaloisField f = field_build(p, 2);
  PaleyPeisertData d;
  d.p = p;
  d.q = f.q();
  d.X = paley_adjacency(f);
  d.Xstar = peisert_adjacency(f);
  d.k = Integer((d.q - 1) / 2);
  d.r = (Integer(p) - 1) / 2;
  d.s = (-Integer(p) - 1) / 2;
  d.paley = graph_idempotents(d.X, p);
  d.peisert = graph_idempotents(d.Xstar, p);
  check_graph_idempotents(d.paley, p, d.k, "paley");
  check_graph_idempotents(d.peisert, p, d.k, "peisert");
  return d;
}

SmithLemmaReport verify_smith_lemma(const PaleyPeisertData& data) {
  const std::uint32_t p = data.p;
  SmithLemmaReport rep;
  rep.p = p;
  rep.expected_p = (p + 1) * (p + 1) / 4 - 2;
  rep.expected_p2 = (p - 1) * (p - 1) / 4;
  const Integer pz(p), p2 = pz * pz;
  const std::array<std::pair<std::string, const IntMatrix*>, 4> targets{{
      {"paley.E2", &data.paley.E2},
      {"paley.E3", &data.paley.E3},
      {"peisert.E2", &data.peisert.E2},
      {"peisert.E3", &data.peisert.E3},
  }};
  rep.pass = true;
  for (const auto& [name, m] : targets) {
    SmithLemmaEntry e;
    e.name = name;
    for (const auto& d : smith_invariants(*m)) {
      ++e.invariant_counts[d];
      if (d == 1)
        ++e.count_one;
      else if (d == pz)
        ++e.count_p;
      else if (d == p2)
        ++e.count_p2;
      else
        ++e.count_other;
    }
    e.pass = e.count_one == 1 && e.count_p == rep.expected_p && e.count_p2 == rep.expected_p2 &&
             e.count_other == 0;
    rep.pass = rep.pass && e.pass;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

SmithLemmaReport verify_smith_lemma(std::uint32_t p) {
  return verify_smith_lemma(paley_idempotent_data(p));
}

}  // namespace glconj
