#include <doctest.h>

#include <random>

#include "hopfkit/scalar.hpp"

using namespace hopfkit;

namespace {

Polynomial poly(std::initializer_list<long> lowest_first) {
  std::vector<Rational> c;
  for (long v : lowest_first) c.push_back(Rational(v));
  return Polynomial(c);
}

// Random elements of Q(q) with small coefficients, nonzero denominators.
struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  Polynomial random_poly(bool nonzero) {
    for (;;) {
      std::vector<Rational> c;
      long deg = small(0, 3);
      for (long k = 0; k <= deg; ++k) c.push_back(make_rational(small(-4, 4), small(1, 3)));
      Polynomial p(c);
      if (!nonzero || !p.is_zero()) return p;
    }
  }
  Scalar random_scalar() { return Scalar(random_poly(false), random_poly(true)); }
};

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(to_string(make_rational(2, 4)) == "1/2");
  CHECK(to_string(make_rational(3, -6)) == "-1/2");
  CHECK(parse_scalar("2/4") == Scalar(make_rational(1, 2)));
  CHECK_THROWS_AS(make_rational(1, 0), ArithmeticError);
}

TEST_CASE("rational functions cancel common factors") {
  // (q^2 - 1)/(q - 1) = q + 1, checked against hand division.
  Scalar s = parse_scalar("(q^2 - 1)/(q - 1)");
  CHECK(s == Scalar(poly({1, 1})));
  CHECK(s.denominator() == poly({1}));
  CHECK(s.numerator() == poly({1, 1}));

  Scalar z = Scalar(Polynomial(), poly({2, 0, 0, 1}));
  CHECK(z.is_zero());
  CHECK(z.denominator() == poly({1}));
  CHECK(z == Scalar(0));

  CHECK_THROWS_AS(Scalar(poly({1}), Polynomial()), ArithmeticError);
  CHECK_THROWS_AS(parse_scalar("1/(q - q)"), ParseError);
}

TEST_CASE("denominators are monic and coprime to numerators") {
  Scalar s = parse_scalar("(2*q + 2)/(4*q^2 - 4)");  // = 1/(2q - 2) = (1/2)/(q - 1)
  CHECK(s.denominator() == poly({-1, 1}));
  CHECK(s.numerator() == Polynomial(make_rational(1, 2)));
  CHECK(gcd(s.numerator(), s.denominator()) == poly({1}));
}

TEST_CASE("polynomial division identity") {
  Gen g(7);
  for (int t = 0; t < 200; ++t) {
    Polynomial a = g.random_poly(false), b = g.random_poly(true);
    DivMod dm = divmod(a, b);
    CHECK(dm.quotient * b + dm.remainder == a);
    CHECK(dm.remainder.degree() < b.degree());
    Polynomial d = gcd(a, b);
    CHECK(divmod(a, d).remainder.is_zero());
    CHECK(divmod(b, d).remainder.is_zero());
  }
}

TEST_CASE("parser accepts the textual syntax and rejects malformed input") {
  CHECK(parse_scalar("-3") == Scalar(-3));
  CHECK(parse_scalar("q") == Scalar::q());
  CHECK(parse_scalar("q^2 - 1") == Scalar(poly({-1, 0, 1})));
  CHECK(parse_scalar("(q+1)*(q-1)") == parse_scalar("q^2-1"));
  CHECK(parse_scalar("1/2 + 1/3") == Scalar(make_rational(5, 6)));
  CHECK(parse_scalar("q^-1") == Scalar::q().inverse());
  CHECK(parse_scalar("2q") == parse_scalar("2*q"));
  CHECK(parse_scalar("3(q+1)") == parse_scalar("3*q + 3"));
  for (const char* bad : {"1//2", "", "q^", "(1", "1)", "2 3", "x", "1/"})
    CHECK_THROWS_AS(parse_scalar(bad), ParseError);
}

TEST_CASE("field axioms on random elements of Q(q)") {
  Gen g(2024);
  const Scalar zero(0), one(1);
  for (int t = 0; t < 150; ++t) {
    Scalar a = g.random_scalar(), b = g.random_scalar(), c = g.random_scalar();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK(a + (-a) == zero);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == one);
      CHECK(a / a == one);
    }
  }
  CHECK_THROWS_AS(zero.inverse(), ArithmeticError);
}

TEST_CASE("printing and parsing round-trip") {
  Gen g(99);
  for (int t = 0; t < 150; ++t) {
    Scalar a = g.random_scalar();
    CHECK(parse_scalar(a.to_string()) == a);
  }
}

TEST_CASE("constants behave like rationals") {
  Scalar a(make_rational(3, 4)), b(make_rational(-2, 5));
  CHECK(a.is_constant());
  CHECK((a * b).constant_value() == make_rational(-3, 10));
  CHECK((a + b).constant_value() == make_rational(7, 20));
  CHECK(Scalar(2).pow(-3) == Scalar(make_rational(1, 8)));
  CHECK_FALSE(Scalar::q().is_constant());
}
