#include "octoe6/jet.hpp"
#include "octoe6/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace octoe6 {

// =========================================================================
// Rational
// =========================================================================

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational denominator must be nonzero");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  Rational r;
  if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator in rational: '" + s + "'");
  r.canonicalize();
  return r;
}

// =========================================================================
// Jet2
// =========================================================================

bool operator==(const Jet2& a, const Jet2& b) {
  return a.f0 == b.f0 && a.f1 == b.f1 && a.f2 == b.f2;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.f0 + b.f0, a.f1 + b.f1, a.f2 + b.f2};
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.f0 - b.f0, a.f1 - b.f1, a.f2 - b.f2};
}

Jet2 operator-(const Jet2& a) { return {-a.f0, -a.f1, -a.f2}; }

Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.f0 * b.f0,
          a.f0 * b.f1 + a.f1 * b.f0,
          a.f0 * b.f2 + 2 * a.f1 * b.f1 + a.f2 * b.f0};
}

Jet2 operator*(const Rational& c, const Jet2& a) {
  return {c * a.f0, c * a.f1, c * a.f2};
}

Jet2 jet_of(Func f, const Rational& c) {
  const Rational c2 = c * c;
  switch (f) {
    case Func::One:  return {1, 0, 0};
    case Func::Cos:  return {1, 0, -c2};
    case Func::Sin:  return {0, c, 0};
    case Func::Cosh: return {1, 0, c2};
    case Func::Sinh: return {0, c, 0};
    case Func::Exp:  return {1, c, c2};
  }
  throw std::logic_error("unknown profile function");
}

double eval(Func f, double x) {
  switch (f) {
    case Func::One:  return 1.0;
    case Func::Cos:  return std::cos(x);
    case Func::Sin:  return std::sin(x);
    case Func::Cosh: return std::cosh(x);
    case Func::Sinh: return std::sinh(x);
    case Func::Exp:  return std::exp(x);
  }
  throw std::logic_error("unknown profile function");
}

Jet2 jet_compose(Func f, const Rational& c, const Jet2& g) {
  if (!is_zero(g.f0))
    throw std::domain_error("jet_compose requires an inner jet with value 0");
  const Jet2 d = jet_of(f, 1);  // (f(0), f'(0), f''(0))
  return {d.f0, d.f1 * c * g.f1, d.f1 * c * g.f2 + d.f2 * c * c * g.f1 * g.f1};
}

}  // namespace octoe6
