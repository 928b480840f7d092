#include "doctest.h"
#include "support.hpp"

#include "lie3zeta/counting.hpp"
#include "lie3zeta/igusa.hpp"

using namespace lie3z;
using lie3z::testing::random_unimodular;
using lie3z::testing::random_unit_matrix;
using lie3z::testing::uniform;

namespace {

QuadraticForm3 form(Prime p, long a, long b, long c, long d, long e, long f) {
  return QuadraticForm3::from_coefficients({a, b, c, d, e, f}, p);
}

QuadraticForm3 random_form(Prime p, long bound = 9) {
  return form(p, uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound),
              uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound));
}

RationalFunction frac(const Polynomial& n, const Polynomial& d) { return RationalFunction::make(n, d); }

QuadraticForm3 scaled(QuadraticForm3 f, long c) {
  f.matrix *= Integer(c);
  return f;
}

IgusaOptions thorough() {
  IgusaOptions o;
  o.verify_level = 6;
  o.cross_check_reconstruction = true;
  return o;
}

}  // namespace

TEST_CASE("diagonalize examples") {
  const auto d = diagonalize(form(5, 0, 4, 0, 0, 0, 1));
  CHECK(d.exponents == std::vector<int>{0, 0, 0});
  CHECK(d.precision == 6);

  const auto r1 = diagonalize(form(3, 0, 0, 0, 0, 0, 1));
  CHECK(r1.rank() == 1);
  CHECK(r1.exponents == std::vector<int>{0});
  CHECK(r1.unit_classes == std::vector<SquareClass>{SquareClass::square});

  // x2^2 - 6 x3^2 at p = 3: units 1 and -2 = 1 mod 3, both squares
  const auto g = diagonalize(form(3, 0, 0, 0, 1, 0, -6));
  CHECK(g.exponents == std::vector<int>{0, 1});
  CHECK(g.unit_classes == std::vector<SquareClass>{SquareClass::square, SquareClass::square});
  CHECK(g.coefficients == std::vector<Rational>{1, -6});

  // x2^2 + 2 x3^2 at p = 3: 2 is a nonsquare
  const auto ns = diagonalize(form(3, 0, 0, 0, 1, 0, 2));
  CHECK(ns.unit_classes == std::vector<SquareClass>{SquareClass::square, SquareClass::nonsquare});

  CHECK_THROWS_WITH_AS(diagonalize(form(2, 1, 0, 0, 1, 0, 1)), "diagonalization unsupported at 2", InputError);
}

TEST_CASE("diagonalize on random forms: witness congruence and determinant") {
  for (Prime p : {3, 5, 7}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = random_form(p, 20);
      const auto d = diagonalize(f);  // throws if the witness congruence fails
      CHECK(d.witness.matrix.determinant() % p != 0);
      CHECK(std::is_sorted(d.exponents.begin(), d.exponents.end()));
    }
  }
}

TEST_CASE("binary_zeta") {
  const Rational q5(1, 5);
  const auto base5 = frac(Polynomial(1 - q5), Polynomial{1, -q5});
  CHECK(binary_zeta(SquareClass::square, 0, 5) == base5 * base5);

  const Rational q(1, 3);
  CHECK(binary_zeta(SquareClass::nonsquare, 1, 3) == frac(Polynomial(1 - q), Polynomial{1, -q}));
  CHECK(binary_zeta(SquareClass::square, 1, 3) == binary_zeta(SquareClass::nonsquare, 1, 3));
  const auto z0 = frac(Polynomial(Rational(8, 9)), Polynomial{1, 0, Rational(-1, 9)});
  CHECK(binary_zeta(SquareClass::nonsquare, 0, 3) == z0);
  CHECK(binary_zeta(SquareClass::nonsquare, 2, 3) == RationalFunction(Rational(2, 3)) + monomial(q, 2) * z0);

  // against the generic descent on x2^2 - d x3^2
  for (Prime p : {3, 5, 7}) {
    const long rho = smallest_nonresidue(p);
    for (int k = 0; k <= 5; ++k) {
      const long pk = to_int64(ipow(p, static_cast<unsigned>(k)));
      CHECK(binary_zeta(SquareClass::square, k, p) == descent_zeta(form(p, 0, 0, 0, 1, 0, -pk)));
      CHECK(binary_zeta(SquareClass::nonsquare, k, p) == descent_zeta(form(p, 0, 0, 0, 1, 0, -pk * rho)));
    }
  }
}

TEST_CASE("igusa_zeta examples") {
  for (Prime p : {2, 3, 5, 7}) {
    const Rational q = ppow(p, -1);
    const auto r = igusa_zeta(form(p, 0, 0, 0, 0, 0, 1), thorough());
    CHECK(r.zeta == frac(Polynomial(1 - q), Polynomial{1, 0, -q}));
    CHECK(r.cone_zeta == RationalFunction(Polynomial::one_minus(q * q * q, 2)) * r.zeta);
    CHECK(r.zeta(1) == 1);
  }
  for (Prime p : {3, 5, 7, 11}) {
    const Rational q = ppow(p, -1);
    const auto r = igusa_zeta(form(p, 0, 4, 0, 0, 0, 1));
    const auto expected = RationalFunction(Polynomial{1 - q, -q * (1 - q)}) /
                          RationalFunction(Polynomial::one_minus(p, 2) * Polynomial::one_minus(p, 1));
    CHECK(substitute_scaled(r.zeta, p * p) == expected);
  }
  const auto aniso = igusa_zeta(form(3, 0, 0, 0, 1, 0, -2));
  CHECK(aniso.zeta == frac(Polynomial(Rational(8, 9)), Polynomial{1, 0, Rational(-1, 9)}));
  CHECK(aniso.method == IgusaMethod::recursion);

  const auto zero = igusa_zeta(form(3, 0, 0, 0, 0, 0, 0));
  CHECK(zero.zeta.is_zero());
  CHECK(zero.cone_zeta.is_zero());
}

TEST_CASE("reconstruct_from_counts examples") {
  for (Prime p : {2, 3, 5}) {
    const Rational q = ppow(p, -1);
    CHECK(reconstruct_from_counts(form(p, 0, 0, 0, 0, 0, 1)).zeta ==
          frac(Polynomial(1 - q), Polynomial{1, 0, -q}));
  }
  // -2(x1^2 - 2(x2^2 - x2 x3 + x3^2)) at p = 2
  const auto sl = form(2, -2, 0, 0, 4, -4, 4);
  const auto r = reconstruct_from_counts(sl);
  CHECK(r.method == IgusaMethod::reconstruction);
  CHECK(substitute_scaled(r.zeta, 4) ==
        RationalFunction(Polynomial{0, 2, 6}) / RationalFunction(Polynomial{1, 0, -2}));
  CHECK(descent_zeta(sl) == r.zeta);

  // x3^2 + 4 x1 x2 at p = 2 relates to x3^2 + x1 x2
  const auto f = reconstruct_from_counts(form(2, 0, 4, 0, 0, 0, 1)).zeta;
  const auto g = reconstruct_from_counts(form(2, 0, 1, 0, 0, 0, 1)).zeta;
  CHECK(substitute_scaled(f, 4) == RationalFunction(Rational(1, 2)) + monomial(8, 2) * substitute_scaled(g, 4));
}

TEST_CASE("methods agree and match counts on random forms") {
  for (Prime p : {2, 3, 5}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto f = random_form(p);
      const auto r = igusa_zeta(f, thorough());
      if (f.is_zero()) continue;
      CHECK(r.zeta == descent_zeta(f));
      CHECK(matches_counts(r.zeta, f, 7));
      CHECK(r.zeta(1) == 1);
    }
  }
}

TEST_CASE("scaling and unit invariance") {
  for (Prime p : {2, 3, 5}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto f = random_form(p);
      const auto z = igusa_zeta(f).zeta;
      CHECK(igusa_zeta(scaled(f, p)).zeta == RationalFunction::t() * z);
      long u = uniform(2, 20);
      while (u % p == 0) ++u;
      CHECK(igusa_zeta(scaled(f, u)).zeta == z);
    }
  }
}

TEST_CASE("equivalence invariance") {
  for (Prime p : {2, 3, 5}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto f = random_form(p, 6);
      BasisChange P;
      P.p = p;
      P.matrix = trial % 2 ? random_unimodular() : random_unit_matrix(p, 3);
      CHECK(igusa_zeta(transform_form(f, P)).zeta == igusa_zeta(f).zeta);
    }
  }
}

TEST_CASE("pole confinement") {
  for (Prime p : {2, 3, 5}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto f = random_form(p);
      if (f.is_zero()) continue;
      for (const auto& pole : pole_profile(igusa_zeta(f).zeta, p)) {
        const bool allowed = pole.sigma == Rational(-3, 2) || pole.sigma == -1 || pole.sigma == Rational(-1, 2);
        CHECK_MESSAGE(allowed, to_string(pole.sigma));
      }
    }
  }
}
