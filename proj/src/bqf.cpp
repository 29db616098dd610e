#include "glconj/bqf.hpp"

#include <sstream>

#include "glconj/linalg.hpp"

namespace glconj {

BinaryQuadraticForm BinaryQuadraticForm::transform(const IntMatrix& m) const {
  // Columns of m are the images of (1, 0) and (0, 1).
  const Integer &p = m(0, 0), &r = m(0, 1), &s = m(1, 0), &t = m(1, 1);
  BinaryQuadraticForm g;
  g.a = (*this)(p, s);
  g.c = (*this)(r, t);
  g.b = 2 * a * p * r + b * (p * t + r * s) + 2 * c * s * t;
  return g;
}

std::string BinaryQuadraticForm::to_string() const {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

std::string to_string(UnitProof p) {
  switch (p) {
    case UnitProof::Witness:
      return "witness";
    case UnitProof::DefiniteMinimum:
      return "definite-minimum";
    case UnitProof::CycleExclusion:
      return "cycle-exclusion";
    case UnitProof::FactorSystem:
      return "factor-system";
  }
  return "unknown";
}

namespace {

bool is_unit(const Integer& v) { return v == 1 || v == -1; }

UnitRepresentation found(const Integer& x, const Integer& y) {
  UnitRepresentation r;
  r.represents = true;
  r.witness = std::make_pair(x, y);
  r.proof = UnitProof::Witness;
  return r;
}

// Right-multiplies m by [[p, q], [r, s]].
void compose(IntMatrix& m, const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
  IntMatrix step(2, 2);
  step(0, 0) = p;
  step(0, 1) = q;
  step(1, 0) = r;
  step(1, 1) = s;
  m = m * step;
}

UnitRepresentation definite(const BinaryQuadraticForm& f) {
  BinaryQuadraticForm g = f;
  if (sgn(g.a) < 0) g = {-g.a, -g.b, -g.c};
  IntMatrix m = IntMatrix::identity(2);
  for (;;) {
    // b into (-a, a]
    const Integer two_a = 2 * g.a;
    Integer k = floor_div(g.a - g.b, two_a);
    if (k != 0) {
      compose(m, 1, k, 0, 1);
      g = BinaryQuadraticForm{g.a, g.b + 2 * g.a * k, g.a * k * k + g.b * k + g.c};
    }
    if (g.a > g.c) {
      compose(m, 0, -1, 1, 0);
      g = BinaryQuadraticForm{g.c, -g.b, g.a};
      continue;
    }
    break;
  }
  if (g.a == 1) return found(m(0, 0), m(1, 0));
  UnitRepresentation r;
  r.proof = UnitProof::DefiniteMinimum;
  r.reduced = g;
  return r;
}

bool is_reduced_indefinite(const BinaryQuadraticForm& g, const Integer& d) {
  if (sgn(g.b) <= 0 || g.b * g.b >= d) return false;
  const Integer two_a = 2 * abs(g.a);
  const Integer lo = two_a + g.b;  // sqrt(D) - b < 2|a|
  if (lo * lo <= d) return false;
  const Integer hi = two_a - g.b;  // 2|a| - b < sqrt(D)
  return sgn(hi) < 0 || hi * hi < d;
}

UnitRepresentation indefinite(const BinaryQuadraticForm& f, const Integer& d) {
  Integer root;
  mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
  BinaryQuadraticForm g = f;
  IntMatrix m = IntMatrix::identity(2);
  auto rho = [&]() {
    if (sgn(g.c) == 0) throw Error("degenerate form in reduction cycle");
    const Integer abs_c = abs(g.c), two_c = 2 * abs_c;
    const Integer upper = abs_c > root ? abs_c : root;
    // b2 = -b mod 2|c| in (upper - 2|c|, upper]
    Integer b2;
    mpz_fdiv_r(b2.get_mpz_t(), Integer(upper + g.b).get_mpz_t(), two_c.get_mpz_t());
    b2 = upper - b2;
    const Integer s = (b2 + g.b) / (2 * g.c);
    compose(m, 0, -1, 1, s);
    g = BinaryQuadraticForm{g.c, -g.b + 2 * g.c * s, g.a - g.b * s + g.c * s * s};
  };
  auto check = [&]() -> std::optional<UnitRepresentation> {
    if (is_unit(g.a)) return found(m(0, 0), m(1, 0));
    if (is_unit(g.c)) return found(m(0, 1), m(1, 1));
    return std::nullopt;
  };
  if (auto r = check()) return *r;
  while (!is_reduced_indefinite(g, d)) {
    rho();
    if (auto r = check()) return *r;
  }
  const BinaryQuadraticForm start = g;
  std::size_t len = 0;
  do {
    rho();
    ++len;
    if (auto r = check()) return *r;
  } while (!(g == start));
  UnitRepresentation r;
  r.proof = UnitProof::CycleExclusion;
  r.reduced = start;
  r.cycle_length = len;
  return r;
}

UnitRepresentation square_discriminant(const BinaryQuadraticForm& f, const Integer& d) {
  Integer s;
  mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
  // f = (alpha x + beta y)(gamma x + delta y)
  Integer alpha, beta, gamma, delta;
  if (sgn(f.a) == 0) {
    alpha = 0;
    beta = 1;
    gamma = f.b;
    delta = f.c;
  } else {
    Integer g;
    const Integer two_a = 2 * f.a, bs = f.b - s;
    mpz_gcd(g.get_mpz_t(), two_a.get_mpz_t(), bs.get_mpz_t());
    alpha = two_a / g;
    beta = bs / g;
    gamma = f.a / alpha;
    delta = (f.b - beta * gamma) / alpha;
  }
  if (!(alpha * gamma == f.a && alpha * delta + beta * gamma == f.b && beta * delta == f.c))
    throw Error("factorization of " + f.to_string() + " failed");
  const Integer det = alpha * delta - beta * gamma;
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      if (sgn(det) != 0) {
        // Cramer's rule
        const Integer xn = e1 * delta - beta * e2, yn = alpha * e2 - gamma * e1;
        if (mpz_divisible_p(xn.get_mpz_t(), det.get_mpz_t()) &&
            mpz_divisible_p(yn.get_mpz_t(), det.get_mpz_t()))
          return found(xn / det, yn / det);
      } else {
        Integer g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), alpha.get_mpz_t(),
                   beta.get_mpz_t());
        if (abs(g) != 1) continue;
        const Integer x = u * g * e1, y = v * g * e1;
        if (gamma * x + delta * y == e2) return found(x, y);
      }
    }
  UnitRepresentation r;
  r.proof = UnitProof::FactorSystem;
  r.reduced = f;
  r.factors = std::make_pair(std::make_pair(alpha, beta), std::make_pair(gamma, delta));
  return r;
}

}  // namespace

UnitRepresentation bqf_represents_unit(const BinaryQuadraticForm& f) {
  if (sgn(f.a) == 0 && sgn(f.b) == 0 && sgn(f.c) == 0) throw Error("form is identically zero");
  const Integer d = f.discriminant();
  if (sgn(d) < 0) return definite(f);
  if (mpz_perfect_square_p(d.get_mpz_t())) return square_discriminant(f, d);
  return indefinite(f, d);
}

}  // namespace glconj
