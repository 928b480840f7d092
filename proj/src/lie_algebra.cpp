#include "lie3zeta/lie_algebra.hpp"

namespace lie3z {

void LieAlgebra3::set_bracket(int i, int j, int k, const Integer& value) {
  lambda(i, j, k) = value;
  lambda(j, i, k) = -value;
}

ValidationReport validate(const LieAlgebra3& algebra) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        if (algebra.lambda(i, j, k) != -algebra.lambda(j, i, k)) {
          throw InputError("antisymmetry violated at (i,j,k) = (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        }
      }
    }
  }
  // Jacobiator is alternating and trilinear, so one triple decides it in dimension 3.
  const auto e = [](int i) {
    RowVector3<Integer> v = RowVector3<Integer>::Zero();
    v(i) = 1;
    return v;
  };
  const RowVector3<Integer> jac = bracket(algebra, e(0), bracket(algebra, e(1), e(2))) +
                                  bracket(algebra, e(1), bracket(algebra, e(2), e(0))) +
                                  bracket(algebra, e(2), bracket(algebra, e(0), e(1)));
  return {jac.isZero()};
}

Matrix3<Integer> commutator_matrix(const LieAlgebra3& algebra, const RowVector3<Integer>& y) {
  Matrix3<Integer> r = Matrix3<Integer>::Zero();
  for (int k = 0; k < 3; ++k) r += y(k) * algebra.slices[static_cast<std::size_t>(k)];
  return r;
}

RowVector3<Integer> bracket(const LieAlgebra3& algebra, const RowVector3<Integer>& u,
                            const RowVector3<Integer>& v) {
  RowVector3<Integer> out;
  for (int k = 0; k < 3; ++k) {
    out(k) = (u * algebra.slices[static_cast<std::size_t>(k)] * v.transpose())(0, 0);
  }
  return out;
}

LieAlgebra3 with_scale_applied(const LieAlgebra3& algebra, Prime p) {
  LieAlgebra3 out = algebra;
  const Integer factor = ipow(p, static_cast<unsigned>(algebra.scale));
  for (auto& s : out.slices) s *= factor;
  out.scale = 0;
  return out;
}

std::array<Integer, 6> QuadraticForm3::coefficients() const {
  const auto& a = matrix;
  return {a(0, 0), a(0, 1) + a(1, 0), a(0, 2) + a(2, 0), a(1, 1), a(1, 2) + a(2, 1), a(2, 2)};
}

QuadraticForm3 QuadraticForm3::from_coefficients(const std::array<Integer, 6>& c, Prime p) {
  QuadraticForm3 f;
  f.p = p;
  f.matrix << c[0], c[1], c[2], 0, c[3], c[4], 0, 0, c[5];
  return f;
}

bool QuadraticForm3::is_zero() const {
  for (const auto& c : coefficients()) {
    if (c != 0) return false;
  }
  return true;
}

QuadraticForm3 extract_form(const LieAlgebra3& algebra, Prime p) {
  // Column c of A holds lambda^k for the pair (23), (31), (12) respectively.
  constexpr int pairs[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  QuadraticForm3 f;
  f.p = p;
  for (int k = 0; k < 3; ++k) {
    for (int c = 0; c < 3; ++c) f.matrix(k, c) = algebra.lambda(pairs[c][0], pairs[c][1], k);
  }
  if (algebra.scale > 0) f.matrix *= ipow(p, static_cast<unsigned>(algebra.scale));
  return f;
}

Matrix3<Integer> adjugate(const Matrix3<Integer>& m) {
  Matrix3<Integer> adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return adj;
}

LieAlgebra3 rebase(const LieAlgebra3& algebra, const Matrix3<Integer>& basis) {
  const Integer det = basis.determinant();
  if (det == 0) throw InputError("basis matrix is singular");
  const Matrix3<Integer> adj = adjugate(basis);  // P^{-1} = adj / det
  std::array<Matrix3<Integer>, 3> conj;
  for (std::size_t k = 0; k < 3; ++k) conj[k] = basis * algebra.slices[k] * basis.transpose();
  LieAlgebra3 out = algebra;
  for (int l = 0; l < 3; ++l) {
    Matrix3<Integer> acc = Matrix3<Integer>::Zero();
    for (int k = 0; k < 3; ++k) acc += conj[static_cast<std::size_t>(k)] * adj(k, l);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (acc(i, j) % det != 0) {
          throw InputError("structure constants are not integral in the new basis");
        }
        acc(i, j) /= det;
      }
    }
    out.slices[static_cast<std::size_t>(l)] = acc;
  }
  return out;
}

LieAlgebra3 change_basis(const LieAlgebra3& algebra, const BasisChange& change) {
  const Integer det = change.matrix.determinant();
  if (det % change.p == 0) throw InputError("not invertible over Z_p");
  return rebase(algebra, change.matrix);
}

QuadraticForm3 transform_form(const QuadraticForm3& form, const BasisChange& change) {
  const Integer det = change.matrix.determinant();
  if (det % change.p == 0) throw InputError("not invertible over Z_p");
  // det * P^{-t} A P^{-1} = adj^t A adj / det.
  const Matrix3<Integer> adj = adjugate(change.matrix);
  Matrix3<Integer> cleared = adj.transpose() * form.matrix * adj;
  bool integral = true;
  for (int i = 0; i < 9 && integral; ++i) integral = cleared(i / 3, i % 3) % det == 0;
  QuadraticForm3 out;
  out.p = form.p;
  if (integral) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) cleared(i, j) /= det;
    }
  }
  out.matrix = cleared;
  return out;
}

}  // namespace lie3z
