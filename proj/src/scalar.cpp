#include "hopfkit/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace hopfkit {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw ArithmeticError("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::q() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(Rational coefficient, std::size_t degree) {
  if (coefficient == 0) return {};
  std::vector<Rational> c(degree + 1);
  c[degree] = std::move(coefficient);
  return Polynomial(std::move(c));
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

std::size_t Polynomial::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++n;
  return n;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial r = *this;
  Rational inv = 1 / leading();
  r *= inv;
  return r;
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {Polynomial{}, a};
  std::vector<Rational> quot(rem.size() - db);
  const Rational lead_inv = 1 / bc.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational factor = rem[k] * lead_inv;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * bc[j];
    quot[k - db] = std::move(factor);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

std::string monomial_string(const Rational& abs_coeff, std::size_t degree) {
  std::string var;
  if (degree == 1) var = "q";
  if (degree > 1) var = "q^" + std::to_string(degree);
  if (degree == 0) return abs_coeff.get_str();
  if (abs_coeff == 1) return var;
  return abs_coeff.get_str() + "*" + var;
}

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    Rational mag = abs(c[k]);
    if (out.empty()) {
      out = (negative ? "-" : "") + monomial_string(mag, k);
    } else {
      out += negative ? " - " : " + ";
      out += monomial_string(mag, k);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(long value) : num_(Rational(value)) {}

RationalFunction::RationalFunction(Rational value) : num_(std::move(value)) {}

RationalFunction::RationalFunction(Polynomial numerator) : num_(std::move(numerator)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw ArithmeticError("zero denominator");
  normalize();
}

RationalFunction RationalFunction::q() { return RationalFunction(Polynomial::q()); }

bool RationalFunction::is_one() const {
  return den_.is_zero() && num_.degree() == 0 && num_.leading() == 1;
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw ArithmeticError("scalar depends on q: " + to_string());
  return num_.coefficient(0);
}

Polynomial RationalFunction::denominator() const { return den_.is_zero() ? Polynomial(Rational(1)) : den_; }

void RationalFunction::normalize() {
  // den_ is a nonzero polynomial here (callers map "1" to empty beforehand
  // or pass an explicit polynomial).
  if (den_.is_zero()) return;
  if (num_.is_zero()) {
    den_ = Polynomial{};
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).quotient;
      den_ = divmod(den_, g).quotient;
    }
  }
  Rational lead_inv = 1 / den_.leading();
  num_ *= lead_inv;
  den_ *= lead_inv;
  if (den_.degree() == 0) den_ = Polynomial{};
}

Scalar normalize(const Polynomial& numerator, const Polynomial& denominator) {
  return RationalFunction(numerator, denominator);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_.is_zero() && other.den_.is_zero()) {
    num_ += other.num_;
    return *this;
  }
  Polynomial d1 = denominator(), d2 = other.denominator();
  num_ = num_ * d2 + other.num_ * d1;
  den_ = d1 * d2;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) { return *this += -other; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = RationalFunction{};
  if (den_.is_zero() && other.den_.is_zero()) {
    if (other.num_.is_constant()) {
      num_ *= other.num_.leading();
    } else if (num_.is_constant()) {
      Rational c = num_.leading();
      num_ = other.num_;
      num_ *= c;
    } else {
      num_ *= other.num_;
    }
    return *this;
  }
  num_ *= other.num_;
  den_ = denominator() * other.denominator();
  normalize();
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero scalar");
  return RationalFunction(denominator(), num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) { return *this *= other.inverse(); }

RationalFunction RationalFunction::pow(long exponent) const {
  RationalFunction base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  RationalFunction result(1);
  while (e > 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string RationalFunction::to_string() const {
  if (den_.is_zero()) return hopfkit::to_string(num_);
  auto wrap = [](const Polynomial& p) {
    std::string s = hopfkit::to_string(p);
    return p.term_count() > 1 || (p.coefficient(0) != 0 && p.degree() > 0) ? "(" + s + ")" : s;
  };
  std::string n = hopfkit::to_string(num_);
  if (num_.term_count() > 1 || n.find('/') != std::string::npos || n.find('*') != std::string::npos)
    n = "(" + n + ")";
  return n + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& s) { return os << s.to_string(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    skip_space();
    if (pos_ >= text_.size()) fail("empty scalar");
    Scalar value = expression();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar \"" + std::string(text_) + "\": " + what + " at column " + std::to_string(pos_ + 1),
                     pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '(';
  }

  Scalar expression() {
    Scalar acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Scalar term() {
    Scalar acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (peek('/')) {
        ++pos_;
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else if (starts_primary()) {
        // Implicit products such as "2q" or "3(q+1)"; a number cannot follow.
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("unexpected number");
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Scalar unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (peek('^')) {
      ++pos_;
      bool negative = false;
      if (peek('-')) {
        negative = true;
        ++pos_;
      }
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected integer exponent");
      long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_++] - '0');
        if (e > 10000) fail("exponent too large");
      }
      if (negative && base.is_zero()) fail("division by zero");
      return base.pow(negative ? -e : e);
    }
    return base;
  }

  Scalar primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar inner = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'q') {
      ++pos_;
      return Scalar::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) {
  try {
    return ScalarParser(text).parse();
  } catch (const ArithmeticError& e) {
    throw ParseError("scalar \"" + std::string(text) + "\": " + e.what(), 0);
  }
}

}  // namespace hopfkit
