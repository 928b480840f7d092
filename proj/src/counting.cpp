#include "lie3zeta/counting.hpp"

#include <cmath>

#include "descent.hpp"

namespace lie3z {

using detail::QuadPoly;
using detail::ResidueKind;

struct Counter::Memo {
  QuadPoly root;
  std::map<std::pair<int, QuadPoly>, Integer> table;
  std::map<int, std::pair<Integer, Integer>> levels;
};

namespace {

// Number of x in (Z/p^m)^3 with h(x) = 0 mod p^m; h is reduced mod p^m.
// With skip_zero the class a = 0 mod p is left out.
Integer count_level(const QuadPoly& h, int m, Prime p, bool skip_zero,
                    std::map<std::pair<int, QuadPoly>, Integer>& memo) {
  if (m == 0) return skip_zero ? Integer(0) : Integer(1);
  if (!skip_zero) {
    if (auto it = memo.find({m, h}); it != memo.end()) return it->second;
  }
  const Integer smooth_lifts = ipow(p, static_cast<unsigned>(2 * (m - 1)));
  const Integer all_lifts = ipow(p, static_cast<unsigned>(3 * (m - 1)));
  const Integer modulus = ipow(p, static_cast<unsigned>(m));
  Integer total = 0;
  detail::for_each_residue(h, p, [&](const std::array<std::int64_t, 3>& a, ResidueKind kind) {
    if (kind == ResidueKind::nonzero) return;
    if (skip_zero && a[0] == 0 && a[1] == 0 && a[2] == 0) return;
    if (kind == ResidueKind::smooth) {
      total += smooth_lifts;
      return;
    }
    const QuadPoly moved = detail::reduce(detail::translate(h, a, p), modulus);
    const int e = detail::truncated_valuation(moved, p, m);
    if (e >= m) {
      total += all_lifts;
      return;
    }
    const QuadPoly next = detail::divide(moved, ipow(p, static_cast<unsigned>(e)));
    total += count_level(next, m - e, p, false, memo) * ipow(p, static_cast<unsigned>(3 * (e - 1)));
  });
  if (!skip_zero) memo.emplace(std::make_pair(m, h), total);
  return total;
}

std::pair<Integer, Integer> count_naive(const QuadraticForm3& f, int m) {
  const Prime p = f.p;
  if (3.0 * m * std::log(static_cast<double>(p)) > std::log(naive_count_bound) + 1e-9) {
    throw InfeasibleError("count infeasible: p^(3m) exceeds the naive enumeration bound");
  }
  if (m == 0) return {1, 1};
  const std::int64_t q = to_int64(ipow(p, static_cast<unsigned>(m)));
  const auto coeffs = f.coefficients();
  std::array<std::int64_t, 6> c;
  for (std::size_t k = 0; k < 6; ++k) c[k] = to_int64(mod_floor(coeffs[k], Integer(q)));
  std::int64_t affine = 0, cone = 0;
  for (std::int64_t x = 0; x < q; ++x) {
    for (std::int64_t y = 0; y < q; ++y) {
      const std::int64_t partial = (c[0] * x % q * x + c[1] * x % q * y + c[3] * y % q * y) % q;
      const std::int64_t lin = (c[2] * x + c[4] * y) % q;
      const bool unit_xy = x % p != 0 || y % p != 0;
      for (std::int64_t z = 0; z < q; ++z) {
        if ((partial + (lin + c[5] * z) % q * z) % q != 0) continue;
        ++affine;
        if (unit_xy || z % p != 0) ++cone;
      }
    }
  }
  return {affine, cone};
}

}  // namespace

Counter::Counter(const QuadraticForm3& form) : p_(form.p), memo_(std::make_unique<Memo>()) {
  require_prime(p_);
  memo_->root = detail::from_form(form);
}

Counter::~Counter() = default;
Counter::Counter(Counter&&) noexcept = default;
Counter& Counter::operator=(Counter&&) noexcept = default;

Integer Counter::affine(int m) {
  if (m < 0) throw InputError("level must be nonnegative");
  if (m == 0) return 1;
  auto it = memo_->levels.find(m);
  if (it == memo_->levels.end()) {
    const QuadPoly h = detail::reduce(memo_->root, ipow(p_, static_cast<unsigned>(m)));
    const Integer all = count_level(h, m, p_, false, memo_->table);
    const Integer cone = count_level(h, m, p_, true, memo_->table);
    it = memo_->levels.emplace(m, std::make_pair(all, cone)).first;
  }
  return it->second.first;
}

Integer Counter::cone(int m) {
  if (m == 0) return 1;
  affine(m);
  return memo_->levels.at(m).second;
}

CountProfile count_profile(const QuadraticForm3& f, int m, CountMethod method) {
  if (m < 0) throw InputError("level must be nonnegative");
  require_prime(f.p);
  if (method == CountMethod::naive) {
    const auto [affine, cone] = count_naive(f, m);
    return {f.p, m, affine, cone};
  }
  Counter counter(f);
  return counter.profile(m);
}

Integer count_affine(const QuadraticForm3& f, int m, CountMethod method) {
  return count_profile(f, m, method).affine_count;
}

Integer count_cone(const QuadraticForm3& f, int m, CountMethod method) {
  return count_profile(f, m, method).cone_count;
}

Rational cone_measure(const QuadraticForm3& f, int m) {
  if (m < 0) throw InputError("level must be nonnegative");
  Counter counter(f);
  const Prime p = f.p;
  Rational mu = Rational(counter.cone(m)) * ppow(p, -3 * m) -
                Rational(counter.cone(m + 1)) * ppow(p, -3 * (m + 1));
  if (m == 0) mu -= ppow(p, -3);
  return mu;
}

std::vector<Rational> poincare_truncation(const QuadraticForm3& f, int M, bool cone) {
  if (M < 0) throw InputError("level must be nonnegative");
  Counter counter(f);
  std::vector<Rational> out;
  for (int m = 0; m <= M; ++m) {
    const Integer n = cone ? counter.cone(m) : counter.affine(m);
    out.push_back(Rational(n) * ppow(f.p, -3 * m));
  }
  return out;
}

}  // namespace lie3z
