#include "lie3zeta/rational_function.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace lie3z {

RationalFunction RationalFunction::make(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return RationalFunction();
  if (den.degree() > 0 && num.degree() >= 0) {
    const Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  const Rational c = den.constant_term() != 0 ? den.constant_term() : den.leading();
  if (c != 1) {
    const Polynomial inv(Rational(1) / c);
    num *= inv;
    den *= inv;
  }
  return RationalFunction(std::move(num), std::move(den), true);
}

RationalFunction RationalFunction::t() { return RationalFunction(Polynomial{0, 1}); }

Rational RationalFunction::operator()(const Rational& t) const {
  const Rational d = den_(t);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_(t) / d;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, true); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) return *this = make(num_ + rhs.num_, den_);
  return *this = make(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  return *this = make(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero rational function");
  return *this = make(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFunction monomial(const Rational& c, unsigned k) {
  return RationalFunction(Polynomial::monomial(c, k));
}

RationalFunction substitute_scaled(const RationalFunction& r, const Rational& c) {
  if (c == 0) return RationalFunction(r(Rational(0)));
  return RationalFunction::make(r.numerator().scaled(c), r.denominator().scaled(c));
}

std::vector<Rational> series(const RationalFunction& r, std::size_t n) {
  if (!r.is_power_series()) throw std::domain_error("not a power series");
  const Polynomial& num = r.numerator();
  const Polynomial& den = r.denominator();
  const Rational d0 = den.constant_term();
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = num[k];
    const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(den.degree()));
    for (std::size_t j = 1; j <= top; ++j) acc -= den[j] * out[k - j];
    out[k] = acc / d0;
  }
  return out;
}

std::vector<double> root_moduli(const Polynomial& poly) {
  std::vector<double> out;
  const int n = poly.degree();
  if (n < 1) return out;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  const double lead = poly.leading().convert_to<double>();
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) {
    companion(i, n - 1) = -poly[static_cast<std::size_t>(i)].convert_to<double>() / lead;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  for (int i = 0; i < n; ++i) out.push_back(std::abs(solver.eigenvalues()[i]));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int multiplicity(Polynomial poly, const Polynomial& factor) {
  int m = 0;
  while (poly.degree() >= factor.degree()) {
    auto [q, r] = divmod(poly, factor);
    if (!r.is_zero()) break;
    poly = std::move(q);
    ++m;
  }
  return m;
}

}  // namespace

std::vector<PoleEntry> pole_profile(const RationalFunction& r, Prime p) {
  constexpr int kMaxB = 6;
  constexpr int kMaxA = 6;
  const Polynomial original = r.denominator();
  Polynomial rest = original;

  std::set<Rational> sigmas;
  for (int b = 1; b <= kMaxB; ++b) {
    for (int a = -kMaxA; a <= kMaxA; ++a) sigmas.insert(Rational(a, b));
  }

  std::vector<PoleEntry> out;
  for (const Rational& sigma : sigmas) {
    if (rest.degree() < 1) break;
    const int a = to_int64(Integer(boost::multiprecision::numerator(sigma)));
    const int b = to_int64(Integer(boost::multiprecision::denominator(sigma)));
    int span = 1;
    for (int k = 1; b * k <= kMaxB; ++k) span = std::lcm(span, k);
    // Every root of modulus p^(-sigma) that can arise is a root of this polynomial.
    const Polynomial envelope =
        Polynomial::one_minus(ppow(p, a * span), static_cast<std::size_t>(b * span));
    PoleEntry entry;
    entry.sigma = sigma;
    while (rest.degree() >= 1) {
      const Polynomial g = gcd(rest, divmod(envelope, rest).second);
      if (g.degree() < 1) break;
      rest = exact_div(rest, g);
      ++entry.factor_mult;
      entry.degree += g.degree();
    }
    if (entry.factor_mult == 0) continue;
    entry.real_root_order =
        multiplicity(original, Polynomial::one_minus(ppow(p, a), static_cast<std::size_t>(b)));
    out.push_back(entry);
  }
  if (rest.degree() >= 1) {
    throw NonStandardPoleError("non-standard pole: denominator factor " + to_string(rest) +
                                   " has roots outside the p^(-a/b) families",
                               root_moduli(rest));
  }
  return out;
}

namespace {

std::string coefficient_term(const Rational& c, std::size_t k, const std::string& var, bool first) {
  std::ostringstream os;
  const bool negative = c < 0;
  const Rational mag = negative ? Rational(-c) : c;
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  if (k == 0 || mag != 1) {
    os << to_string(mag);
    if (k > 0) os << "*";
  }
  if (k >= 1) os << var;
  if (k >= 2) os << "^" << k;
  return os.str();
}

}  // namespace

std::string to_string(const Polynomial& poly, const std::string& var) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < poly.coefficients().size(); ++k) {
    if (poly[k] == 0) continue;
    out += coefficient_term(poly[k], k, var, first);
    first = false;
  }
  return out;
}

std::string to_string(const RationalFunction& r, const std::string& var) {
  if (r.denominator().degree() == 0) return to_string(r.numerator(), var);
  return "(" + to_string(r.numerator(), var) + ")/(" + to_string(r.denominator(), var) + ")";
}

}  // namespace lie3z
