// Exact rational functions in one variable t = p^(-s).
//
// Values are kept in a canonical reduced form: numerator and denominator are
// coprime over Q and the denominator is scaled so that its constant term is 1
// (its leading coefficient when the constant term vanishes). Equal functions
// therefore compare equal coefficient by coefficient.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie3zeta/polynomial.hpp"

namespace lie3z {

class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Rational(c)) {}          // NOLINT
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT

  /// Canonical reduced form of num/den; throws on a zero denominator.
  static RationalFunction make(Polynomial num, Polynomial den);
  /// The variable t.
  static RationalFunction t();

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator has a nonzero constant term.
  bool is_power_series() const { return den_.constant_term() != 0; }

  Rational operator()(const Rational& t) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RationalFunction(Polynomial num, Polynomial den, bool /*canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  Polynomial num_;
  Polynomial den_;
};

/// c * t^k.
RationalFunction monomial(const Rational& c, unsigned k);

/// r(c t).
RationalFunction substitute_scaled(const RationalFunction& r, const Rational& c);

/// First n+1 Taylor coefficients at t = 0; throws "not a power series" if the
/// denominator vanishes at 0.
std::vector<Rational> series(const RationalFunction& r, std::size_t n);

/// Candidate pole group: all denominator roots of modulus p^(-sigma).
struct PoleEntry {
  Rational sigma;
  /// Number of peeling rounds: the largest multiplicity among roots of this modulus.
  int factor_mult = 0;
  /// Multiplicity of the positive real root t = p^(-sigma).
  int real_root_order = 0;
  /// Total degree of the denominator factors with this modulus.
  int degree = 0;
};

/// Raised when a denominator has roots whose moduli are not of the form p^(-a/b).
class NonStandardPoleError : public std::runtime_error {
 public:
  NonStandardPoleError(const std::string& what, std::vector<double> root_moduli)
      : std::runtime_error(what), root_moduli_(std::move(root_moduli)) {}
  const std::vector<double>& root_moduli() const { return root_moduli_; }

 private:
  std::vector<double> root_moduli_;
};

/// Groups the denominator roots by modulus p^(-sigma), sigma = a/b with b <= 6
/// and |sigma| <= 6, sorted by sigma. Re(s) of the corresponding pole is sigma.
std::vector<PoleEntry> pole_profile(const RationalFunction& r, Prime p);

/// Moduli of all complex roots of a polynomial (numerical diagnostic only).
std::vector<double> root_moduli(const Polynomial& poly);

std::string to_string(const Polynomial& poly, const std::string& var = "t");
std::string to_string(const RationalFunction& r, const std::string& var = "t");

}  // namespace lie3z
