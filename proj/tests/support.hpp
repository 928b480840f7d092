// Small hand-rolled generators for property tests.
#pragma once

#include <optional>
#include <random>

#include "lie3zeta/lie_algebra.hpp"
#include "lie3zeta/rational_function.hpp"

namespace lie3z::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1234u);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long bound = 9) {
  long den = uniform(1, 4);
  return Rational(uniform(-bound, bound), den);
}

inline Polynomial random_polynomial(int max_degree, long bound = 9) {
  std::vector<Rational> c(static_cast<std::size_t>(uniform(0, max_degree) + 1));
  for (auto& x : c) x = random_rational(bound);
  return Polynomial(std::move(c));
}

/// Random rational function whose denominator has constant term 1.
inline RationalFunction random_series_function(int max_degree = 3) {
  Polynomial den = random_polynomial(max_degree);
  den = den - Polynomial(den.constant_term()) + Polynomial(1);
  return RationalFunction::make(random_polynomial(max_degree), den);
}

inline LieAlgebra3 random_algebra(long bound = 3) {
  LieAlgebra3 L;
  constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs) {
    for (int k = 0; k < 3; ++k) L.set_bracket(pr[0], pr[1], k, uniform(-bound, bound));
  }
  return L;
}

/// Integer matrix with det(P) prime to p.
inline Matrix3<Integer> random_unit_matrix(Prime p, long bound = 4) {
  for (;;) {
    Matrix3<Integer> m;
    for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = uniform(-bound, bound);
    if (m.determinant() % p != 0) return m;
  }
}

/// Integer matrix with det = +-1.
inline Matrix3<Integer> random_unimodular(int steps = 6) {
  Matrix3<Integer> m = Matrix3<Integer>::Identity();
  for (int s = 0; s < steps; ++s) {
    const int i = static_cast<int>(uniform(0, 2));
    int j = static_cast<int>(uniform(0, 1));
    if (j >= i) ++j;
    m.row(i) += Integer(uniform(-2, 2)) * m.row(j);
    if (uniform(0, 3) == 0) m.row(i).swap(m.row(j));
  }
  return m;
}

// x2^2 - d' x3^2 equivalent to the binary part of a x2^2 + b x2 x3 + c x3^2 up to a unit
struct BinaryClass {
  int k;
  bool square;
};

inline std::optional<BinaryClass> binary_class(const QuadraticForm3& f) {
  const auto co = f.coefficients();
  const Rational a(co[3]), b(co[4]), c(co[5]);
  const Rational dprime = (b * b - 4 * a * c) / (4 * a * a);
  if (dprime == 0) return std::nullopt;
  Integer num = boost::multiprecision::numerator(dprime);
  const Integer den = boost::multiprecision::denominator(dprime);
  const int k = valuation(num, f.p) - valuation(den, f.p);
  num /= ipow(f.p, static_cast<unsigned>(valuation(num, f.p)));
  const Integer unit = num * den;
  return BinaryClass{k, legendre(unit, f.p) == 1};
}

}  // namespace lie3z::testing
