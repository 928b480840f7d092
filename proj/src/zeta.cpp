#include "lie3zeta/zeta.hpp"

#include <algorithm>
#include <sstream>

namespace lie3z {

RationalFunction local_riemann(Prime p, int a, int b) {
  if (b < 1) throw InputError("local_riemann needs b >= 1");
  return RationalFunction::make(Polynomial(1), Polynomial::one_minus(ppow(p, a), static_cast<std::size_t>(b)));
}

RationalFunction zeta_abelian(Prime p) {
  return local_riemann(p, 0, 1) * local_riemann(p, 1, 1) * local_riemann(p, 2, 1);
}

RationalFunction assemble_zeta(const RationalFunction& igusa, Prime p, int scale) {
  if (scale < 0) throw InputError("scale must be nonnegative");
  const Rational p2 = ppow(p, 2);
  const RationalFunction shifted = substitute_scaled(igusa, p2);
  const RationalFunction weight =
      monomial(ppow(p, 2 * (scale + 1)), static_cast<unsigned>(scale + 1)) / RationalFunction(1 - ppow(p, -1));
  return zeta_abelian(p) - shifted * local_riemann(p, 2, 2) * local_riemann(p, 2, 1) * weight;
}

RationalFunction cases_zeta(const RationalFunction& igusa, Prime p) {
  const Rational q = ppow(p, -1);
  const Rational p2 = ppow(p, 2);
  const RationalFunction t = RationalFunction::t();
  const RationalFunction cone_shifted =
      RationalFunction(Polynomial::one_minus(Rational(p), 2)) * substitute_scaled(igusa, p2);
  const RationalFunction one_minus_p2t(Polynomial::one_minus(p2, 1));
  const RationalFunction a1 =
      RationalFunction((1 - q * q * q) / (1 - q)) *
      (monomial(p2, 1) / one_minus_p2t -
       cone_shifted * monomial(p2, 1) * RationalFunction(Polynomial::one_minus(1, 3)) /
           (RationalFunction(1 - q * q * q) * RationalFunction(Polynomial::one_minus(p2, 4)) * one_minus_p2t));
  const RationalFunction grass = monomial(p2, 2) / RationalFunction(Polynomial::one_minus(p2, 2));
  const RationalFunction a2 = RationalFunction(q * q + q + 1) * grass;
  const RationalFunction a12 = RationalFunction(q + 1) * grass * a1;
  return (RationalFunction(1L) + a1 + a2 + a12) / RationalFunction(Polynomial::one_minus(1, 3));
}

RationalFunction zeta_via_cases(const LieAlgebra3& algebra, Prime p, const IgusaOptions& options) {
  if (algebra.scale != 0) throw InputError("the case decomposition is restricted to scale 0");
  validate(algebra);
  return cases_zeta(igusa_zeta(extract_form(algebra, p), options).zeta, p);
}

std::vector<Integer> dirichlet_coefficients(const RationalFunction& zeta, int n) {
  if (n < 0) throw InputError("number of terms must be nonnegative");
  std::vector<Integer> out;
  const auto coeffs = series(zeta, static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (boost::multiprecision::denominator(c) != 1 || c < 0) {
      throw VerificationError("invalid zeta expansion",
                              "coefficient a_" + std::to_string(k) + " = " + to_string(c));
    }
    out.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

PoleAnalysis analyze_poles(const RationalFunction& zeta, Prime p) {
  PoleAnalysis out;
  out.poles = pole_profile(zeta, p);
  const std::vector<Rational> allowed{0, Rational(1, 2), 1, Rational(3, 2), 2};
  for (const auto& pole : out.poles) {
    if (!out.abscissa || pole.sigma > *out.abscissa) out.abscissa = pole.sigma;
    if (pole.real_root_order > 0) out.real_pole_orders[pole.sigma] = pole.real_root_order;
    if (std::find(allowed.begin(), allowed.end(), pole.sigma) == allowed.end()) {
      out.violations.push_back(pole.sigma);
    }
  }
  return out;
}

ZetaReport subalgebra_zeta(const LieAlgebra3& algebra, Prime p, const ZetaOptions& options) {
  require_prime(p);
  validate(algebra);
  ZetaReport report;
  report.p = p;
  report.scale = algebra.scale;
  LieAlgebra3 base = algebra;
  base.scale = 0;
  report.igusa = igusa_zeta(extract_form(base, p), options.igusa);
  report.zeta = assemble_zeta(report.igusa.zeta, p, algebra.scale);
  report.poles = analyze_poles(report.zeta, p);
  report.coefficients = dirichlet_coefficients(report.zeta, options.terms);
  return report;
}

GrowthBounds growth_check(const RationalFunction& zeta, Prime p, int e, int n0, int n1, int base) {
  if (n0 < 1 || n1 < n0) throw InputError("growth range must satisfy 1 <= n0 <= n1");
  const auto a = dirichlet_coefficients(zeta, n1);
  GrowthBounds out;
  Integer sigma = 0;
  for (int n = 0; n <= n1; ++n) {
    sigma += a[static_cast<std::size_t>(n)];
    if (n < n0) continue;
    const Rational ratio = Rational(sigma) / (ppow(p, base * n) * Rational(ipow(Integer(n), static_cast<unsigned>(e))));
    if (n == n0 || ratio < out.lower) out.lower = ratio;
    if (n == n0 || ratio > out.upper) out.upper = ratio;
  }
  return out;
}

namespace {

constexpr int kMaxB = 6;
constexpr int kMaxA = 6;

// Divides out local Riemann denominators, larger b first; returns false if
// something else remains.
bool peel(Polynomial poly, Prime p, std::map<std::pair<int, int>, int>& exponents, int sign) {
  for (int b = kMaxB; b >= 1 && poly.degree() > 0; --b) {
    for (int a = -kMaxA; a <= kMaxA && poly.degree() > 0; ++a) {
      const Polynomial f = Polynomial::one_minus(ppow(p, a), static_cast<std::size_t>(b));
      while (poly.degree() >= b) {
        auto [quot, rem] = divmod(poly, f);
        if (!rem.is_zero()) break;
        poly = std::move(quot);
        exponents[{a, b}] += sign;
      }
    }
  }
  return poly.degree() <= 0;
}

std::string riemann_argument(int a, int b) {
  std::ostringstream os;
  if (b != 1) os << b;
  os << "s";
  if (a > 0) os << "-" << a;
  if (a < 0) os << "+" << -a;
  return os.str();
}

std::string latex_rational(const Rational& c) {
  if (boost::multiprecision::denominator(c) == 1) return to_string(c);
  const Rational mag = c < 0 ? Rational(-c) : c;
  return std::string(c < 0 ? "-" : "") + "\\frac{" + to_string(Integer(boost::multiprecision::numerator(mag))) +
         "}{" + to_string(Integer(boost::multiprecision::denominator(mag))) + "}";
}

std::string latex_polynomial(const Polynomial& poly, Prime p) {
  if (poly.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < poly.coefficients().size(); ++k) {
    const Rational c = poly[k];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << latex_rational(mag);
      continue;
    }
    if (mag != 1) os << latex_rational(mag) << " \\cdot ";
    os << p << "^{-" << (k == 1 ? std::string() : std::to_string(k)) << "s}";
  }
  return os.str();
}

}  // namespace

std::optional<ProductForm> product_form(const RationalFunction& zeta, Prime p) {
  if (zeta.is_zero() || !zeta.is_power_series()) return std::nullopt;
  std::map<std::pair<int, int>, int> exponents;
  if (!peel(zeta.denominator(), p, exponents, 1)) return std::nullopt;

  ProductForm out;
  Polynomial rest = zeta.numerator();
  if (rest.constant_term() == 0) return std::nullopt;
  out.constant = rest.constant_term();
  rest = rest * Polynomial(1 / out.constant);
  // Pull out numerator factors G dividing some 1 - p^a t^b whose cofactor is
  // itself a product of local Riemann denominators.
  bool changed = true;
  while (changed && rest.degree() > 0) {
    changed = false;
    for (int b = kMaxB; b >= 1 && !changed; --b) {
      for (int a = -kMaxA; a <= kMaxA && !changed; ++a) {
        const Polynomial f = Polynomial::one_minus(ppow(p, a), static_cast<std::size_t>(b));
        Polynomial g = gcd(rest, f);
        if (g.degree() < 1) continue;
        g = g * Polynomial(1 / g.constant_term());
        std::map<std::pair<int, int>, int> extra;
        if (!peel(exact_div(f, g), p, extra, 1)) continue;
        rest = exact_div(rest, g);
        exponents[{a, b}] -= 1;
        for (const auto& [key, e] : extra) exponents[key] += e;
        changed = true;
      }
    }
  }
  // normalize the remainder back to constant term 1
  const Rational c0 = rest.constant_term();
  out.constant *= c0;
  out.remainder = rest * Polynomial(1 / c0);
  for (const auto& [key, e] : exponents) {
    if (e != 0) out.factors.push_back({key.first, key.second, e});
  }
  std::stable_sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if ((x.exponent > 0) != (y.exponent > 0)) return x.exponent > 0;
    if (x.b != y.b) return x.b < y.b;
    return x.a < y.a;
  });
  return out;
}

std::string to_latex(const RationalFunction& zeta, Prime p) {
  if (const auto form = product_form(zeta, p)) {
    std::ostringstream os;
    if (form->constant != 1) os << latex_rational(form->constant) << " ";
    for (const auto& f : form->factors) {
      os << "\\zeta_{" << p << "}(" << riemann_argument(f.a, f.b) << ")";
      if (f.exponent != 1) os << "^{" << f.exponent << "}";
    }
    if (form->remainder.degree() > 0) os << "\\left(" << latex_polynomial(form->remainder, p) << "\\right)";
    if (form->factors.empty() && form->remainder.degree() <= 0 && form->constant == 1) os << "1";
    return os.str();
  }
  if (zeta.denominator().degree() == 0) return latex_polynomial(zeta.numerator(), p);
  return "\\frac{" + latex_polynomial(zeta.numerator(), p) + "}{" + latex_polynomial(zeta.denominator(), p) + "}";
}

std::string to_plain(const RationalFunction& zeta, Prime p) {
  if (const auto form = product_form(zeta, p)) {
    std::ostringstream os;
    bool first = true;
    const auto sep = [&] {
      if (!first) os << " ";
      first = false;
    };
    if (form->constant != 1) {
      sep();
      os << to_string(form->constant);
    }
    for (const auto& f : form->factors) {
      sep();
      os << "zeta_" << p << "(" << riemann_argument(f.a, f.b) << ")";
      if (f.exponent != 1) os << "^" << f.exponent;
    }
    if (form->remainder.degree() > 0) {
      sep();
      os << "(" << to_string(form->remainder) << ")";
    }
    if (first) os << "1";
    return os.str();
  }
  return to_string(zeta);
}

}  // namespace lie3z
