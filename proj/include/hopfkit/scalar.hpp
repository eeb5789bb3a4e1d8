#pragma once

// Exact coefficient field: rationals and rational functions in one parameter q.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfkit {

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// GMP keeps mpq_class canonical (positive denominator, reduced) after every
// arithmetic operation; values built from raw parts go through canonicalize().
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
std::string to_string(const Rational& r);

/// Dense univariate polynomial over Q in the parameter q.
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial q();
  static Polynomial monomial(Rational coefficient, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }
  std::size_t term_count() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial monic() const;
  Rational evaluate(const Rational& at) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
std::string to_string(const Polynomial& p);

/// Element of Q(q) kept in lowest terms: gcd(num, den) = 1, den monic, and
/// zero is 0/1. A unit denominator is stored as an empty polynomial, which
/// keeps constants (the overwhelmingly common case) allocation-light and
/// lets arithmetic on them skip the polynomial gcd.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long value);  // NOLINT(google-explicit-constructor)
  RationalFunction(Rational value);  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(Polynomial numerator);
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction q();

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return den_.is_zero() && num_.is_constant(); }
  Rational constant_value() const;

  const Polynomial& numerator() const { return num_; }
  Polynomial denominator() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);
  RationalFunction inverse() const;
  RationalFunction pow(long exponent) const;

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  std::string to_string() const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;  // empty means 1
};

using Scalar = RationalFunction;

/// Brings an arbitrary (numerator, denominator) pair to canonical form.
/// Throws ArithmeticError on a zero denominator.
Scalar normalize(const Polynomial& numerator, const Polynomial& denominator);

/// Parses the textual scalar syntax: integers, fractions "p/q", the
/// parameter q, and + - * / ^ with parentheses, e.g. "(q^2 - 1)/(q - 1)".
Scalar parse_scalar(std::string_view text);

inline std::string to_string(const Scalar& s) { return s.to_string(); }
std::ostream& operator<<(std::ostream& os, const RationalFunction& s);

}  // namespace hopfkit
