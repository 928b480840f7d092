// Dense univariate polynomials over the rationals in the variable t = p^(-s).
#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "lie3zeta/numeric.hpp"

namespace lie3z {

class Polynomial {
 public:
  Polynomial() = default;
  /// Coefficients ascending by degree; trailing zeros are dropped.
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);
  Polynomial(const Rational& constant);  // NOLINT: scalars embed as constants
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// 1 - c t^degree.
  static Polynomial one_minus(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^i; zero beyond the degree.
  Rational operator[](std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational leading() const;
  Rational constant_term() const { return (*this)[0]; }

  Rational operator()(const Rational& t) const;
  /// p(c t).
  Polynomial scaled(const Rational& c) const;
  /// Truncation to degrees <= n.
  Polynomial truncated(std::size_t n) const;
  /// Divides every coefficient by the leading one.
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (zero iff both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);
/// Exact quotient; throws if b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& b, const Polynomial& a);

}  // namespace lie3z
