#include "doctest.h"
#include "support.hpp"

#include "lie3zeta/counting.hpp"

using namespace lie3z;
using lie3z::testing::uniform;

namespace {

QuadraticForm3 form(Prime p, long a, long b, long c, long d, long e, long f) {
  return QuadraticForm3::from_coefficients({a, b, c, d, e, f}, p);
}

// Independent oracle: plain enumeration with exact integers.
std::pair<long, long> brute_force(const QuadraticForm3& f, int m) {
  const long q = to_int64(ipow(f.p, static_cast<unsigned>(m)));
  long affine = 0, cone = 0;
  for (long x = 0; x < q; ++x) {
    for (long y = 0; y < q; ++y) {
      for (long z = 0; z < q; ++z) {
        RowVector3<Integer> v;
        v << x, y, z;
        if (f(v) % q != 0) continue;
        ++affine;
        if (m == 0 || x % f.p || y % f.p || z % f.p) ++cone;
      }
    }
  }
  return {affine, cone};
}

QuadraticForm3 random_form(Prime p, long bound = 6) {
  return form(p, uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound),
              uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound));
}

}  // namespace

TEST_CASE("count_affine examples") {
  CHECK(count_affine(form(3, 0, 0, 0, 0, 0, 1), 1) == 9);
  CHECK(count_affine(form(2, 0, 0, 0, 0, 0, 0), 2) == 64);
  // x3^2 + 4 x1 x2 mod 5: (2p - 1) + (p - 1)^2 solutions
  CHECK(count_affine(form(5, 0, 4, 0, 0, 0, 1), 1) == 25);
  CHECK(brute_force(form(5, 0, 4, 0, 0, 0, 1), 1).first == 25);
}

TEST_CASE("count_cone examples") {
  const auto sl1 = form(3, -3, 0, 0, -2, 0, 1);  // x3^2 - 2 x2^2 - 3 x1^2
  CHECK(count_cone(sl1, 1) == 2);
  CHECK(count_cone(sl1, 2) == 0);
  CHECK(count_cone(form(7, 1, 0, 0, 1, 0, 0), 0) == 1);
  CHECK(count_affine(form(7, 1, 0, 0, 1, 0, 0), 0) == 1);
}

TEST_CASE("cone_measure") {
  // f = x3^2: x in W with x3 a unit has measure 1 - 1/3
  CHECK(cone_measure(form(3, 0, 0, 0, 0, 0, 1), 0) == Rational(2, 3));
  CHECK(cone_measure(form(3, -3, 0, 0, -2, 0, 1), 2) == 0);
  CHECK(cone_measure(form(5, -5, 0, 0, -2, 0, 1), 3) == 0);

  // total cone measure stays below 1 - p^-3
  const auto f = form(3, 1, 0, 0, 1, 0, -3);
  Rational total = 0;
  for (int m = 0; m <= 5; ++m) {
    const Rational mu = cone_measure(f, m);
    CHECK(mu >= 0);
    total += mu;
  }
  CHECK(total <= 1 - Rational(1, 27));
}

TEST_CASE("poincare_truncation examples") {
  CHECK(poincare_truncation(form(5, 0, 0, 0, 0, 0, 0), 2, false) == std::vector<Rational>{1, 1, 1});
  CHECK(poincare_truncation(form(2, 0, 0, 0, 0, 0, 1), 1, false) == std::vector<Rational>{1, Rational(1, 2)});
  CHECK(poincare_truncation(form(3, -3, 0, 0, -2, 0, 1), 3, true) ==
        std::vector<Rational>{1, Rational(2, 27), 0, 0});
}

TEST_CASE("naive backend bound") {
  CHECK_THROWS_AS(count_affine(form(5, 1, 0, 0, 0, 0, 0), 5, CountMethod::naive), InfeasibleError);
  CHECK(count_affine(form(5, 1, 0, 0, 0, 0, 0), 5, CountMethod::recursive) == ipow(Prime{5}, 12));
}

TEST_CASE("backends agree with enumeration on random forms") {
  for (Prime p : {2, 3, 5}) {
    const int top = p == 2 ? 4 : (p == 3 ? 3 : 2);
    for (int trial = 0; trial < 12; ++trial) {
      const auto f = random_form(p);
      Counter counter(f);
      for (int m = 0; m <= top; ++m) {
        const auto [affine, cone] = brute_force(f, m);
        CHECK(counter.affine(m) == affine);
        CHECK(counter.cone(m) == cone);
        const auto naive = count_profile(f, m, CountMethod::naive);
        CHECK(naive.affine_count == affine);
        CHECK(naive.cone_count == cone);
      }
    }
  }
}

TEST_CASE("count bounds and homogeneity recursion") {
  for (Prime p : {2, 3, 5}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto f = random_form(p, 30);
      Counter counter(f);
      CHECK(counter.affine(1) == counter.cone(1) + 1);
      for (int m = 2; m <= 7; ++m) {
        CHECK(counter.affine(m) == counter.cone(m) + ipow(p, 3) * counter.affine(m - 2));
        CHECK(counter.cone(m) <= counter.affine(m));
        CHECK(counter.affine(m) <= ipow(p, static_cast<unsigned>(3 * m)));
      }
    }
  }
}
