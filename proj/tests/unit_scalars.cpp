// Unit tests for the exact scalar layer: canonical rationals and degree-2 jets.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octoe6/jet.hpp"
#include "octoe6/rational.hpp"

#include <cmath>
#include <stdexcept>

using namespace octoe6;

TEST_CASE("rationals are canonical and printable") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(1, -2) == rat(-1, 2));
  CHECK(rat(-6, -4) == rat(3, 2));
  CHECK(to_string(rat(1, 2)) == "1/2");
  CHECK(to_string(rat(-1, 2)) == "-1/2");
  CHECK(to_string(rat(3)) == "3");
  CHECK(to_string(rat(0)) == "0");
  CHECK_THROWS_AS((void)rat(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and predicates") {
  CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
  CHECK(rat(2, 3) * rat(9, 4) == rat(3, 2));
  CHECK(rat(1, 2) - rat(1, 2) == rat(0));
  CHECK(sign(rat(-7, 3)) == -1);
  CHECK(sign(rat(0)) == 0);
  CHECK(sign(rat(5)) == 1);
  CHECK(is_zero(rat(0, 9)));
  CHECK(!is_zero(rat(1, 9)));
  CHECK(to_double(rat(1, 4)) == doctest::Approx(0.25));
}

TEST_CASE("rational parsing round-trips and rejects junk") {
  for (const char* s : {"0", "3", "-3", "1/2", "-1/2", "22/7", "-115/39"}) {
    CHECK(to_string(parse_rational(s)) == s);
  }
  CHECK(parse_rational("4/6") == rat(2, 3));  // canonicalized on input
  CHECK_THROWS_AS((void)parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("elementary jets match their Taylor coefficients") {
  const Rational c = rat(3, 2);
  CHECK(jet_of(Func::One, c) == Jet2{rat(1), rat(0), rat(0)});
  CHECK(jet_of(Func::Cos, c) == Jet2{rat(1), rat(0), rat(-9, 4)});
  CHECK(jet_of(Func::Sin, c) == Jet2{rat(0), rat(3, 2), rat(0)});
  CHECK(jet_of(Func::Cosh, c) == Jet2{rat(1), rat(0), rat(9, 4)});
  CHECK(jet_of(Func::Sinh, c) == Jet2{rat(0), rat(3, 2), rat(0)});
  CHECK(jet_of(Func::Exp, c) == Jet2{rat(1), rat(3, 2), rat(9, 4)});
}

TEST_CASE("elementary jets agree with finite differences of eval") {
  const double h = 1e-5;
  const Rational c = rat(3, 4);
  const double cd = to_double(c);
  for (Func f : {Func::One, Func::Cos, Func::Sin, Func::Cosh, Func::Sinh, Func::Exp}) {
    const Jet2 j = jet_of(f, c);
    const double f0 = eval(f, 0.0);
    const double fp = eval(f, cd * h);
    const double fm = eval(f, -cd * h);
    CHECK(to_double(j.f0) == doctest::Approx(f0).epsilon(1e-9));
    CHECK(to_double(j.f1) == doctest::Approx((fp - fm) / (2 * h)).epsilon(1e-6).scale(1.0));
    CHECK(to_double(j.f2) == doctest::Approx((fp + fm - 2 * f0) / (h * h)).epsilon(1e-4).scale(1.0));
  }
}

TEST_CASE("jet products satisfy the classical identities") {
  for (const Rational& c : {rat(1), rat(1, 2), rat(-3, 2), rat(5)}) {
    const Jet2 one{rat(1), rat(0), rat(0)};
    CHECK(jet_of(Func::Cos, c) * jet_of(Func::Cos, c) +
              jet_of(Func::Sin, c) * jet_of(Func::Sin, c) ==
          one);
    CHECK(jet_of(Func::Cosh, c) * jet_of(Func::Cosh, c) -
              jet_of(Func::Sinh, c) * jet_of(Func::Sinh, c) ==
          one);
    CHECK(jet_of(Func::Exp, c) * jet_of(Func::Exp, -c) == one);
  }
  // exp(a/2) * exp(-a/2) term by term, and the square of sin(a).
  CHECK(Jet2{rat(1), rat(1, 2), rat(1, 4)} * Jet2{rat(1), rat(-1, 2), rat(1, 4)} ==
        Jet2{rat(1), rat(0), rat(0)});
  CHECK(Jet2{rat(0), rat(1), rat(0)} * Jet2{rat(0), rat(1), rat(0)} ==
        Jet2{rat(0), rat(0), rat(2)});
}

TEST_CASE("jet linear operations") {
  const Jet2 a{rat(1), rat(2), rat(3)};
  const Jet2 b{rat(-1), rat(1, 2), rat(0)};
  CHECK(a + b == Jet2{rat(0), rat(5, 2), rat(3)});
  CHECK(a - b == Jet2{rat(2), rat(3, 2), rat(3)});
  CHECK(-a == Jet2{rat(-1), rat(-2), rat(-3)});
  CHECK(rat(2, 3) * a == Jet2{rat(2, 3), rat(4, 3), rat(2)});
  CHECK(is_zero(a - a));
  CHECK(!is_zero(a));
}

TEST_CASE("jet composition through an origin-based inner curve") {
  // sin(3 * sin(2a)): value 0, slope 6, curvature 0.
  const Jet2 inner = jet_of(Func::Sin, rat(2));
  CHECK(jet_compose(Func::Sin, rat(3), inner) == Jet2{rat(0), rat(6), rat(0)});
  // exp(c * g) with g = (0, g1, g2): (1, c g1, c g2 + c^2 g1^2).
  const Jet2 g{rat(0), rat(1, 2), rat(-1)};
  CHECK(jet_compose(Func::Exp, rat(4), g) == Jet2{rat(1), rat(2), rat(0)});
  CHECK_THROWS_AS((void)jet_compose(Func::Sin, rat(1), Jet2{rat(1), rat(0), rat(0)}),
                  std::domain_error);
}
