// Igusa's local zeta function Z_f(s) = int_{Z_p^3} |f(x)|_p^s dx of a ternary
// quadratic form, as an exact rational function of t = p^(-s).
#pragma once

#include <string>
#include <vector>

#include "lie3zeta/lie_algebra.hpp"
#include "lie3zeta/rational_function.hpp"

namespace lie3z {

enum class SquareClass { square, nonsquare };

/// sum_i u_i p^(a_i) y_i^2 with y = x P^(-1), for odd p.
struct DiagonalForm {
  Prime p = 3;
  /// Exponents a_i of the present variables, ascending; absent variables are omitted.
  std::vector<int> exponents;
  std::vector<SquareClass> unit_classes;
  /// Exact coefficients u_i p^(a_i) (rationals with denominators prime to p).
  std::vector<Rational> coefficients;
  /// Rows of P carry the new variables; P (A + A^t) P^t = diag(2 u_i p^(a_i), 0...) mod p^precision.
  BasisChange witness;
  int precision = 0;

  int rank() const { return static_cast<int>(exponents.size()); }
};

/// Throws InputError("diagonalization unsupported at 2") for p = 2.
DiagonalForm diagonalize(const QuadraticForm3& f);

enum class IgusaMethod { closed_form, recursion, fixed_point, reconstruction };
std::string to_string(IgusaMethod method);

struct IgusaResult {
  RationalFunction zeta;
  /// (1 - p^-3 t^2) * zeta, the integral over the primitive cone.
  RationalFunction cone_zeta;
  IgusaMethod method = IgusaMethod::closed_form;
  /// Highest level m at which the result was compared with N_m.
  int verification_level = 0;
};

struct IgusaOptions {
  /// Check the series of (1 - t Z)/(1 - t) against N_m p^(-3m) for m <= verify_level.
  int verify_level = 4;
  /// Also rebuild Z from counts and require equality.
  bool cross_check_reconstruction = true;
};

/// Z_f: strips content, then dispatches (odd p by rank of the diagonal form,
/// p = 2 by descent), falling back to reconstruction. Throws
/// VerificationError("igusa evaluation failed", ...) if no method verifies.
IgusaResult igusa_zeta(const QuadraticForm3& f, const IgusaOptions& options = {});

/// Z of x^2 - d y^2 with d = p^k times a unit of the given class, p odd.
RationalFunction binary_zeta(SquareClass unit_class, int k, Prime p);

/// Z_f by descent over residue classes, solving the linear equations that
/// arise when a state recurs. Works for every p.
RationalFunction descent_zeta(const QuadraticForm3& f);

/// Z_f from the counts N_0..N_(D+5) with the denominator
/// (1 - p^-3 t^2)(1 - p^-1 t)(1 - p^-1 t^2)(1 - p^-2 t^2) and numerator degree D,
/// verified on four further coefficients. Throws
/// VerificationError("reconstruction inconsistent", ...) on mismatch.
IgusaResult reconstruct_from_counts(const QuadraticForm3& f);

/// Largest e with p^e dividing every coefficient of f; f must be nonzero.
int form_content(const QuadraticForm3& f);

/// Checks series((1 - t Z)/(1 - t)) against N_m p^(-3m) for m <= level.
bool matches_counts(const RationalFunction& zeta, const QuadraticForm3& f, int level);

}  // namespace lie3z
