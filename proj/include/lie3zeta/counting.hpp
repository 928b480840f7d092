// Solution counts of f = 0 modulo p^m, in all of (Z/p^m)^3 and in the primitive cone.
#pragma once

#include <map>
#include <memory>
#include <vector>

#include "lie3zeta/lie_algebra.hpp"

namespace lie3z {

enum class CountMethod {
  automatic,  ///< recursive descent
  naive,      ///< enumeration of (Z/p^m)^3, allowed while p^(3m) <= naive_count_bound
  recursive,
};

inline constexpr double naive_count_bound = 1e8;

/// N_m and N*_m for one level. N_0 = N*_0 = 1.
struct CountProfile {
  Prime p = 2;
  int level = 0;
  Integer affine_count;
  Integer cone_count;
};

/// Counts for a single form, memoized across levels.
class Counter {
 public:
  explicit Counter(const QuadraticForm3& form);
  ~Counter();
  Counter(Counter&&) noexcept;
  Counter& operator=(Counter&&) noexcept;

  Integer affine(int m);
  Integer cone(int m);
  CountProfile profile(int m) { return {p_, m, affine(m), cone(m)}; }
  Prime prime() const { return p_; }

 private:
  struct Memo;
  Prime p_;
  std::unique_ptr<Memo> memo_;
};

/// N_m: residues x mod p^m with f(x) = 0 mod p^m. Throws InfeasibleError("count
/// infeasible") when the naive method is forced beyond its bound.
Integer count_affine(const QuadraticForm3& f, int m, CountMethod method = CountMethod::automatic);
/// N*_m: as count_affine restricted to x not divisible by p.
Integer count_cone(const QuadraticForm3& f, int m, CountMethod method = CountMethod::automatic);
CountProfile count_profile(const QuadraticForm3& f, int m, CountMethod method = CountMethod::automatic);

/// mu*_m = N*_m p^(-3m) - N*_(m+1) p^(-3(m+1)) - [m = 0] p^(-3).
Rational cone_measure(const QuadraticForm3& f, int m);

/// Coefficients N_m p^(-3m) (or N*_m p^(-3m) when cone is set) for m = 0..M.
std::vector<Rational> poincare_truncation(const QuadraticForm3& f, int M, bool cone);

}  // namespace lie3z
