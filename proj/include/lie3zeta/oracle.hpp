// Brute-force subalgebra counts by enumerating sublattices in Hermite normal form.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lie3zeta/lie_algebra.hpp"

namespace lie3z {

/// Rows span the sublattice. Upper triangular, positive diagonal, and
/// 0 <= M(i,j) < M(j,j) for i < j.
struct SublatticeBasis {
  Matrix3<Integer> matrix;

  Integer index() const { return matrix(0, 0) * matrix(1, 1) * matrix(2, 2); }
};

/// Visits every sublattice of Z_p^3 of index p^n exactly once, in a fixed order.
void enumerate_sublattices(Prime p, int n, const std::function<void(const SublatticeBasis&)>& visit);
std::vector<SublatticeBasis> sublattices(Prime p, int n);

/// Number of sublattices of index p^n, sum over p^(e1+e2+e3) = p^n of p^e2 p^(2 e3).
Integer sublattice_count(Prime p, int n);

/// Bracket closure of the three basis rows, by exact back-substitution.
bool is_subalgebra(const LieAlgebra3& algebra, const SublatticeBasis& basis);

struct OracleCount {
  Prime p = 2;
  int n = 0;
  Integer subalgebras;
  Integer sublattices;
};

/// Default budget on the number of sublattices of index at most p^n.
constexpr std::uint64_t default_oracle_budget = 2'000'000;

/// default_oracle_budget, or LIE3Z_ORACLE_BUDGET when set to a positive integer.
std::uint64_t oracle_budget();

/// Subalgebras of p^scale L of index p^n. Throws InfeasibleError("oracle budget: ...")
/// beyond the budget.
OracleCount count_subalgebras(const LieAlgebra3& algebra, Prime p, int n);

/// det(a) (a^-1 R(a[1]) a^-t)_23 = L_23(a[1]) a_11 - L_13(a[1]) a_21 + L_12(a[1]) a_31
/// with a[1] the first column of a, checked as an exact rational identity and
/// mod p^k. Throws InputError if det(a) is divisible by p.
bool check_coset_lemma(const LieAlgebra3& algebra, const Matrix3<Integer>& alpha, Prime p, int k);

}  // namespace lie3z
