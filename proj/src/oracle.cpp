#include "lie3zeta/oracle.hpp"

#include <array>
#include <cstdlib>
#include <string>

namespace lie3z {

namespace {

using Wide = __int128;

// |lambda| and the diagonal below these keep every intermediate under 2^127
constexpr long long kSmallLambda = 1LL << 20;
constexpr long long kSmallDiagonal = 1LL << 20;

template <class T>
struct Closure {
  std::array<std::array<std::array<T, 3>, 3>, 3> lambda{};  // lambda[i][j][k]

  std::array<T, 3> bracket(const std::array<T, 3>& u, const std::array<T, 3>& v) const {
    std::array<T, 3> w{T(0), T(0), T(0)};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const T uv = u[i] * v[j];
        if (uv == 0) continue;
        for (int k = 0; k < 3; ++k) w[k] += uv * lambda[i][j][k];
      }
    }
    return w;
  }

  static bool member(std::array<T, 3> w, const std::array<std::array<T, 3>, 3>& rows) {
    for (int i = 0; i < 3; ++i) {
      const T d = rows[i][i];
      if (w[i] % d != 0) return false;
      const T c = w[i] / d;
      if (c == 0) continue;
      for (int j = i; j < 3; ++j) w[j] -= c * rows[i][j];
    }
    return true;
  }

  bool closed(const std::array<std::array<T, 3>, 3>& rows) const {
    constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pr : pairs) {
      if (!member(bracket(rows[pr[0]], rows[pr[1]]), rows)) return false;
    }
    return true;
  }
};

bool fits(const Integer& x, long long bound) { return x < bound && x > -bound; }

bool small_lambda(const LieAlgebra3& algebra) {
  for (const auto& s : algebra.slices) {
    for (int i = 0; i < 9; ++i) {
      if (!fits(s(i / 3, i % 3), kSmallLambda)) return false;
    }
  }
  return true;
}

template <class T>
Closure<T> closure_of(const LieAlgebra3& algebra) {
  Closure<T> c;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if constexpr (std::is_same_v<T, Integer>) {
          c.lambda[i][j][k] = algebra.slices[k](i, j);
        } else {
          c.lambda[i][j][k] = static_cast<T>(algebra.slices[k](i, j).template convert_to<long long>());
        }
      }
    }
  }
  return c;
}

template <class T>
std::array<std::array<T, 3>, 3> rows_of(const Matrix3<Integer>& m) {
  std::array<std::array<T, 3>, 3> rows{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if constexpr (std::is_same_v<T, Integer>) {
        rows[i][j] = m(i, j);
      } else {
        rows[i][j] = static_cast<T>(m(i, j).template convert_to<long long>());
      }
    }
  }
  return rows;
}

// Iterates over HNF bases of index p^n as raw long long rows.
template <class Visit>
void for_each_hnf(Prime p, int n, Visit&& visit) {
  for (int e1 = 0; e1 <= n; ++e1) {
    for (int e2 = 0; e1 + e2 <= n; ++e2) {
      const int e3 = n - e1 - e2;
      const long long d1 = ipow(p, static_cast<unsigned>(e1)).convert_to<long long>();
      const long long d2 = ipow(p, static_cast<unsigned>(e2)).convert_to<long long>();
      const long long d3 = ipow(p, static_cast<unsigned>(e3)).convert_to<long long>();
      for (long long a = 0; a < d2; ++a) {
        for (long long b = 0; b < d3; ++b) {
          for (long long c = 0; c < d3; ++c) visit(std::array<std::array<long long, 3>, 3>{{{d1, a, b}, {0, d2, c}, {0, 0, d3}}});
        }
      }
    }
  }
}

}  // namespace

void enumerate_sublattices(Prime p, int n, const std::function<void(const SublatticeBasis&)>& visit) {
  require_prime(p);
  if (n < 0) throw InputError("index exponent must be nonnegative");
  for_each_hnf(p, n, [&](const auto& rows) {
    SublatticeBasis basis;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) basis.matrix(i, j) = rows[i][j];
    }
    visit(basis);
  });
}

std::vector<SublatticeBasis> sublattices(Prime p, int n) {
  std::vector<SublatticeBasis> out;
  enumerate_sublattices(p, n, [&](const SublatticeBasis& b) { out.push_back(b); });
  return out;
}

Integer sublattice_count(Prime p, int n) {
  require_prime(p);
  if (n < 0) throw InputError("index exponent must be nonnegative");
  Integer total = 0;
  for (int e1 = 0; e1 <= n; ++e1) {
    for (int e2 = 0; e1 + e2 <= n; ++e2) {
      total += ipow(p, static_cast<unsigned>(e2)) * ipow(p, static_cast<unsigned>(2 * (n - e1 - e2)));
    }
  }
  return total;
}

bool is_subalgebra(const LieAlgebra3& algebra, const SublatticeBasis& basis) {
  bool small = small_lambda(algebra);
  for (int i = 0; i < 3 && small; ++i) {
    for (int j = 0; j < 3; ++j) small = small && fits(basis.matrix(i, j), kSmallDiagonal);
  }
  if (small) return closure_of<Wide>(algebra).closed(rows_of<Wide>(basis.matrix));
  return closure_of<Integer>(algebra).closed(rows_of<Integer>(basis.matrix));
}

std::uint64_t oracle_budget() {
  if (const char* env = std::getenv("LIE3Z_ORACLE_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
    }
  }
  return default_oracle_budget;
}

OracleCount count_subalgebras(const LieAlgebra3& algebra, Prime p, int n) {
  require_prime(p);
  if (n < 0) throw InputError("index exponent must be nonnegative");
  Integer cumulative = 0;
  for (int k = 0; k <= n; ++k) cumulative += sublattice_count(p, k);
  const std::uint64_t budget = oracle_budget();
  if (cumulative > budget) {
    throw InfeasibleError("oracle budget: " + to_string(cumulative) + " sublattices of index <= p^" +
                          std::to_string(n) + " exceed " + std::to_string(budget));
  }
  const LieAlgebra3 L = with_scale_applied(algebra, p);
  OracleCount out;
  out.p = p;
  out.n = n;
  out.sublattices = sublattice_count(p, n);
  std::uint64_t hits = 0;
  if (small_lambda(L) && ipow(p, static_cast<unsigned>(n)) < kSmallDiagonal) {
    const auto closure = closure_of<Wide>(L);
    for_each_hnf(p, n, [&](const auto& raw) {
      std::array<std::array<Wide, 3>, 3> rows{};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) rows[i][j] = raw[i][j];
      }
      if (closure.closed(rows)) ++hits;
    });
  } else {
    enumerate_sublattices(p, n, [&](const SublatticeBasis& b) {
      if (is_subalgebra(L, b)) ++hits;
    });
  }
  out.subalgebras = hits;
  return out;
}

bool check_coset_lemma(const LieAlgebra3& algebra, const Matrix3<Integer>& alpha, Prime p, int k) {
  require_prime(p);
  if (k < 1) throw InputError("precision k must be positive");
  const Integer det = alpha.determinant();
  if (det % p == 0) throw InputError("alpha is singular mod p");
  const RowVector3<Integer> y = alpha.col(0).transpose();
  const auto L = [&](int i, int j) {
    Integer v = 0;
    for (int c = 0; c < 3; ++c) v += algebra.slices[c](i, j) * y(c);
    return v;
  };
  Matrix3<Rational> R;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) R(i, j) = Rational(L(i, j));
  }
  // alpha^-1 = adj(alpha) / det
  const Matrix3<Integer> adj = adjugate(alpha);
  Matrix3<Rational> beta;
  for (int i = 0; i < 9; ++i) beta(i / 3, i % 3) = Rational(adj(i / 3, i % 3)) / Rational(det);
  const Rational lhs = Rational(det) * (beta * R * beta.transpose())(1, 2);
  const Integer rhs = L(1, 2) * alpha(0, 0) - L(0, 2) * alpha(1, 0) + L(0, 1) * alpha(2, 0);
  if (lhs != Rational(rhs)) return false;
  const Integer modulus = ipow(p, static_cast<unsigned>(k));
  return mod_floor(Integer(boost::multiprecision::numerator(lhs)) - rhs, modulus) == 0 &&
         boost::multiprecision::denominator(lhs) == 1;
}

}  // namespace lie3z
