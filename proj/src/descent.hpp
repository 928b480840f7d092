// Quadratic polynomials in three variables and the residue-class descent shared
// by the counting and Igusa engines.
#pragma once

#include <array>

#include "lie3zeta/lie_algebra.hpp"

namespace lie3z::detail {

/// c0 + b1 x1 + b2 x2 + b3 x3 + sum_{i<=j} c_ij x_i x_j, stored as
/// [c0, b1, b2, b3, c11, c12, c13, c22, c23, c33].
struct QuadPoly {
  std::array<Integer, 10> c;

  bool is_zero() const {
    for (const auto& x : c) {
      if (x != 0) return false;
    }
    return true;
  }
  friend bool operator<(const QuadPoly& a, const QuadPoly& b) { return a.c < b.c; }
  friend bool operator==(const QuadPoly& a, const QuadPoly& b) { return a.c == b.c; }
};

inline constexpr int kQuadIndex[3][3] = {{4, 5, 6}, {5, 7, 8}, {6, 8, 9}};

inline QuadPoly from_form(const QuadraticForm3& f) {
  const auto m = f.coefficients();
  QuadPoly h;
  for (int i = 0; i < 4; ++i) h.c[static_cast<std::size_t>(i)] = 0;
  for (int i = 0; i < 6; ++i) h.c[static_cast<std::size_t>(4 + i)] = m[static_cast<std::size_t>(i)];
  return h;
}

/// Minimum p-adic valuation over the nonzero coefficients; h must be nonzero.
inline int content_valuation(const QuadPoly& h, Prime p) {
  int best = -1;
  for (const auto& x : h.c) {
    if (x == 0) continue;
    const int v = valuation(x, p);
    if (best < 0 || v < best) best = v;
  }
  return best;
}

/// Minimum valuation, treating coefficients that vanish mod `modulus` = p^m as valuation m.
inline int truncated_valuation(const QuadPoly& h, Prime p, int m) {
  int best = m;
  for (const auto& x : h.c) {
    if (x == 0) continue;
    best = std::min(best, valuation(x, p));
  }
  return best;
}

inline QuadPoly divide(QuadPoly h, const Integer& d) {
  for (auto& x : h.c) x /= d;
  return h;
}

inline QuadPoly reduce(QuadPoly h, const Integer& modulus) {
  for (auto& x : h.c) x = mod_floor(x, modulus);
  return h;
}

/// h(a + p w) as a polynomial in w.
inline QuadPoly translate(const QuadPoly& h, const std::array<std::int64_t, 3>& a, Prime p) {
  QuadPoly out;
  Integer value = h.c[0];
  for (int i = 0; i < 3; ++i) value += h.c[static_cast<std::size_t>(1 + i)] * a[static_cast<std::size_t>(i)];
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      value += h.c[static_cast<std::size_t>(kQuadIndex[i][j])] * a[static_cast<std::size_t>(i)] *
               a[static_cast<std::size_t>(j)];
    }
  }
  out.c[0] = value;
  const Integer pp = p;
  for (int i = 0; i < 3; ++i) {
    Integer grad = h.c[static_cast<std::size_t>(1 + i)];
    for (int j = 0; j < 3; ++j) {
      const Integer& cij = h.c[static_cast<std::size_t>(kQuadIndex[i][j])];
      grad += (i == j ? 2 * cij : cij) * a[static_cast<std::size_t>(j)];
    }
    out.c[static_cast<std::size_t>(1 + i)] = pp * grad;
  }
  const Integer p2 = pp * pp;
  for (int k = 4; k < 10; ++k) out.c[static_cast<std::size_t>(k)] = p2 * h.c[static_cast<std::size_t>(k)];
  return out;
}

enum class ResidueKind { nonzero, smooth, singular };

/// Calls visit(a, kind) for every a in (Z/p)^3, where kind classifies h at a:
/// h(a) a unit, a zero with nonvanishing gradient mod p, or a singular zero.
template <typename Visit>
void for_each_residue(const QuadPoly& h, Prime p, Visit&& visit) {
  std::array<std::int64_t, 10> r;
  for (std::size_t k = 0; k < 10; ++k) r[k] = to_int64(mod_floor(h.c[k], Integer(p)));
  std::array<std::int64_t, 3> a{};
  for (a[0] = 0; a[0] < p; ++a[0]) {
    for (a[1] = 0; a[1] < p; ++a[1]) {
      for (a[2] = 0; a[2] < p; ++a[2]) {
        std::int64_t v = r[0];
        for (int i = 0; i < 3; ++i) v = (v + r[static_cast<std::size_t>(1 + i)] * a[static_cast<std::size_t>(i)]) % p;
        for (int i = 0; i < 3; ++i) {
          for (int j = i; j < 3; ++j) {
            v = (v + r[static_cast<std::size_t>(kQuadIndex[i][j])] * a[static_cast<std::size_t>(i)] % p *
                         a[static_cast<std::size_t>(j)]) %
                p;
          }
        }
        if (v != 0) {
          visit(a, ResidueKind::nonzero);
          continue;
        }
        bool smooth = false;
        for (int i = 0; i < 3 && !smooth; ++i) {
          std::int64_t g = r[static_cast<std::size_t>(1 + i)];
          for (int j = 0; j < 3; ++j) {
            const std::int64_t cij = r[static_cast<std::size_t>(kQuadIndex[i][j])];
            g = (g + (i == j ? 2 * cij : cij) % p * a[static_cast<std::size_t>(j)]) % p;
          }
          smooth = g != 0;
        }
        visit(a, smooth ? ResidueKind::smooth : ResidueKind::singular);
      }
    }
  }
}

}  // namespace lie3z::detail
