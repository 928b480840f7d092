// Local subalgebra zeta functions of three-dimensional Z_p-Lie algebras.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lie3zeta/igusa.hpp"
#include "lie3zeta/lie_algebra.hpp"
#include "lie3zeta/rational_function.hpp"

namespace lie3z {

/// zeta_p(b s - a) = 1/(1 - p^a t^b).
RationalFunction local_riemann(Prime p, int a, int b);

/// zeta_p(s) zeta_p(s-1) zeta_p(s-2).
RationalFunction zeta_abelian(Prime p);

/// zeta_{Z_p^3} - Z_f(s-2) zeta_p(2s-2) zeta_p(s-2) (p^2 t)^(i+1) / (1 - p^-1)
/// from the Igusa zeta Z_f of the unscaled form.
RationalFunction assemble_zeta(const RationalFunction& igusa, Prime p, int scale);

struct PoleAnalysis {
  std::vector<PoleEntry> poles;
  /// Largest sigma; empty when there are no poles.
  std::optional<Rational> abscissa;
  /// Multiplicity of the root t = p^(-sigma), per sigma.
  std::map<Rational, int> real_pole_orders;
  /// Poles outside {0, 1/2, 1, 3/2, 2}.
  std::vector<Rational> violations;
};

PoleAnalysis analyze_poles(const RationalFunction& zeta, Prime p);

struct ZetaReport {
  RationalFunction zeta;
  Prime p = 2;
  int scale = 0;
  IgusaResult igusa;
  PoleAnalysis poles;
  /// a_0..a_n, a_k the number of subalgebras of index p^k.
  std::vector<Integer> coefficients;
};

struct ZetaOptions {
  int terms = 10;
  IgusaOptions igusa;
};

/// Throws InputError for antisymmetry violations and VerificationError if the
/// expansion is not a series of nonnegative integers.
ZetaReport subalgebra_zeta(const LieAlgebra3& algebra, Prime p, const ZetaOptions& options = {});

/// The same zeta function assembled from the maximal-subalgebra case decomposition.
/// Requires scale 0.
RationalFunction zeta_via_cases(const LieAlgebra3& algebra, Prime p, const IgusaOptions& options = {});
RationalFunction cases_zeta(const RationalFunction& igusa, Prime p);

/// a_0..a_n; throws VerificationError("invalid zeta expansion", ...) if some
/// coefficient is negative or not an integer.
std::vector<Integer> dirichlet_coefficients(const RationalFunction& zeta, int n);

struct GrowthBounds {
  Rational lower;
  Rational upper;
};

/// min and max over n in [n0, n1] of sigma_n / (p^(base n) n^e), where
/// sigma_n = a_0 + ... + a_n.
GrowthBounds growth_check(const RationalFunction& zeta, Prime p, int e, int n0, int n1, int base = 1);

/// zeta = constant * prod_i zeta_p(b_i s - a_i)^(exponent_i) * remainder(t).
struct ProductForm {
  struct Factor {
    int a;
    int b;
    int exponent;
  };
  Rational constant = 1;
  std::vector<Factor> factors;
  Polynomial remainder = Polynomial(1);
};

/// Empty when the denominator is not a product of local Riemann factors.
std::optional<ProductForm> product_form(const RationalFunction& zeta, Prime p);

/// LaTeX for the product form when it exists, otherwise a fraction of polynomials in p^{-s}.
std::string to_latex(const RationalFunction& zeta, Prime p);

/// Plain-text rendering of the product form ("zeta_3(s) zeta_3(2s-2) (1 + 6*t^2)"),
/// or of the rational function in t.
std::string to_plain(const RationalFunction& zeta, Prime p);

}  // namespace lie3z
