#include <catch_amalgamated.hpp>

#include <random>

#include <octacat/polyq.hpp>

using octacat::PolyQ;
using octacat::Rational;

namespace {

PolyQ random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 4), num(-9, 9), den(1, 5);
  PolyQ p;
  for (int e = deg(rng); e >= 0; --e) p += PolyQ::monomial(Rational(num(rng), den(rng)), static_cast<std::size_t>(e));
  return p;
}

}  // namespace

TEST_CASE("rational literals parse canonically") {
  CHECK(octacat::parse_rational("6/4") == Rational(3, 2));
  CHECK(octacat::parse_rational("-2") == Rational(-2));
  CHECK(octacat::parse_rational("+7/1") == Rational(7));
  CHECK_THROWS_AS(octacat::parse_rational("1/0"), octacat::ParseError);
  CHECK_THROWS_AS(octacat::parse_rational("1//2"), octacat::ParseError);
  CHECK_THROWS_AS(octacat::parse_rational("x"), octacat::ParseError);
  CHECK_THROWS_AS(octacat::parse_rational(""), octacat::ParseError);
}

TEST_CASE("polynomial printing") {
  PolyQ t = PolyQ::t();
  CHECK(PolyQ().str() == "0");
  CHECK(t.str() == "t");
  CHECK((t * t - t * Rational(3) + PolyQ(Rational(1, 2))).str() == "t^2 - 3*t + 1/2");
  CHECK((-t).str() == "-t");
  CHECK((t * Rational(2)).str() == "2*t");
}

TEST_CASE("parse inverts str on random polynomials") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    PolyQ p = random_poly(rng);
    CHECK(PolyQ::parse(p.str()) == p);
  }
  CHECK(PolyQ::parse("(2*t+1)") == PolyQ::t() * Rational(2) + PolyQ(1L));
  CHECK(PolyQ::parse("-1/2*t^3") == PolyQ::monomial(Rational(-1, 2), 3));
  CHECK_THROWS_AS(PolyQ::parse("2t"), octacat::ParseError);
  CHECK_THROWS_AS(PolyQ::parse("t^"), octacat::ParseError);
  CHECK_THROWS_AS(PolyQ::parse(""), octacat::ParseError);
}

TEST_CASE("ring laws and evaluation agree with pointwise arithmetic") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    PolyQ a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == PolyQ());
    for (Rational x : {Rational(0), Rational(3), Rational(-2, 7)}) {
      CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
      CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
  }
}

TEST_CASE("pow and exact division") {
  PolyQ t = PolyQ::t();
  PolyQ a = t + PolyQ(1L);
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(0) == PolyQ(1L));
  PolyQ prod = a.pow(2) * (t - PolyQ(2L));
  CHECK(prod.exact_div(a) == a * (t - PolyQ(2L)));
  CHECK(prod.degree() == 3);
  CHECK(PolyQ().degree() == -1);
}
