// Three-dimensional Lie algebras over Z_p given by integer structure constants,
// and the ternary quadratic form attached to them.
#pragma once

#include <array>
#include <string>

#include "lie3zeta/numeric.hpp"

namespace lie3z {

/// Structure constants [e_i, e_j] = sum_k lambda_ij^k e_k, stored as three
/// slices with slice(k)(i, j) = lambda_ij^k (all indices 0-based). The algebra
/// described is p^scale * L for the stored constants.
struct LieAlgebra3 {
  std::array<Matrix3<Integer>, 3> slices{Matrix3<Integer>::Zero(), Matrix3<Integer>::Zero(),
                                         Matrix3<Integer>::Zero()};
  int scale = 0;
  std::string label;

  Integer& lambda(int i, int j, int k) { return slices[static_cast<std::size_t>(k)](i, j); }
  const Integer& lambda(int i, int j, int k) const {
    return slices[static_cast<std::size_t>(k)](i, j);
  }
  /// Sets lambda_ij^k and lambda_ji^k = -value.
  void set_bracket(int i, int j, int k, const Integer& value);

  friend bool operator==(const LieAlgebra3& a, const LieAlgebra3& b) {
    return a.slices == b.slices && a.scale == b.scale;
  }
};

/// Antisymmetry holds (otherwise validate throws); the Jacobi identity is informational.
struct ValidationReport {
  bool jacobi_holds = false;
};

/// Throws InputError naming the first (i,j,k), 1-based, that breaks antisymmetry.
ValidationReport validate(const LieAlgebra3& algebra);

/// R(y) with entries L_ij(y) = sum_k lambda_ij^k y_k (stored constants, scale ignored).
Matrix3<Integer> commutator_matrix(const LieAlgebra3& algebra, const RowVector3<Integer>& y);

/// [u, v] in coordinates, using the stored constants.
RowVector3<Integer> bracket(const LieAlgebra3& algebra, const RowVector3<Integer>& u,
                            const RowVector3<Integer>& v);

/// The algebra p^scale * L written with scale 0.
LieAlgebra3 with_scale_applied(const LieAlgebra3& algebra, Prime p);

/// f(x) = x * matrix * x^t at a fixed prime. The matrix need not be symmetric.
struct QuadraticForm3 {
  Matrix3<Integer> matrix = Matrix3<Integer>::Zero();
  Prime p = 2;

  Integer operator()(const RowVector3<Integer>& x) const { return (x * matrix * x.transpose())(0, 0); }

  /// Monomial coefficients (x1^2, x1x2, x1x3, x2^2, x2x3, x3^2).
  std::array<Integer, 6> coefficients() const;
  /// Upper-triangular matrix with the given monomial coefficients.
  static QuadraticForm3 from_coefficients(const std::array<Integer, 6>& c, Prime p);
  /// A + A^t, so that 2 f(x) = x * symmetric * x^t.
  Matrix3<Integer> symmetric() const { return matrix + matrix.transpose(); }

  bool is_zero() const;
  /// Same polynomial (matrices may differ by an antisymmetric part).
  bool same_polynomial(const QuadraticForm3& other) const { return coefficients() == other.coefficients(); }

  friend bool operator==(const QuadraticForm3& a, const QuadraticForm3& b) {
    return a.p == b.p && a.matrix == b.matrix;
  }
};

/// e'_i = sum_j matrix(i, j) e_j; det(matrix) must be a p-adic unit.
struct BasisChange {
  Matrix3<Integer> matrix = Matrix3<Integer>::Identity();
  Prime p = 2;
};

/// A with columns (lambda_23^k), (lambda_31^k), (lambda_12^k), times p^scale.
QuadraticForm3 extract_form(const LieAlgebra3& algebra, Prime p);

/// Structure constants in the basis e'_i = sum_j P_ij e_j for an arbitrary
/// nonsingular integer P. Throws InputError if they are not integral.
LieAlgebra3 rebase(const LieAlgebra3& algebra, const Matrix3<Integer>& basis);

/// rebase() restricted to basis changes in GL_3(Z_p); throws "not invertible
/// over Z_p" when p divides det(P).
LieAlgebra3 change_basis(const LieAlgebra3& algebra, const BasisChange& change);

/// A' = det(P) P^{-t} A P^{-1}, the form of change_basis(L, P) when A is the
/// form of L. When det(P) is a unit other than +-1 the exact A' may have
/// denominators prime to p; the result is then det(P) * A', integral and
/// representing the same form up to a unit.
QuadraticForm3 transform_form(const QuadraticForm3& form, const BasisChange& change);

/// Classical adjugate, so that m * adjugate(m) = det(m) * I.
Matrix3<Integer> adjugate(const Matrix3<Integer>& m);

}  // namespace lie3z
