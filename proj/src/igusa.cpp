#include "lie3zeta/igusa.hpp"

#include <map>

#include "descent.hpp"
#include "lie3zeta/counting.hpp"

namespace lie3z {

using detail::QuadPoly;
using detail::ResidueKind;

std::string to_string(IgusaMethod method) {
  switch (method) {
    case IgusaMethod::closed_form: return "closed_form";
    case IgusaMethod::recursion: return "recursion";
    case IgusaMethod::fixed_point: return "fixed_point";
    case IgusaMethod::reconstruction: return "reconstruction";
  }
  return "unknown";
}

namespace {

SquareClass square_class(const Rational& unit, Prime p) {
  const Integer n = boost::multiprecision::numerator(unit) * boost::multiprecision::denominator(unit);
  return legendre(n, p) == 1 ? SquareClass::square : SquareClass::nonsquare;
}

Integer to_residue(const Rational& r, const Integer& modulus) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  return mod_floor(num * mod_inverse(den, modulus), modulus);
}

// (1 - p^-1) t / (1 - p^-1 t): integral of |z|^s over pZ_p, rescaled to Z_p.
RationalFunction smooth_tail(Prime p) {
  const Rational q = ppow(p, -1);
  return RationalFunction::make(Polynomial{0, 1 - q}, Polynomial{1, -q});
}

QuadraticForm3 divide_form(const QuadraticForm3& f, int e) {
  auto c = f.coefficients();
  const Integer d = ipow(f.p, static_cast<unsigned>(e));
  for (auto& x : c) x /= d;
  return QuadraticForm3::from_coefficients(c, f.p);
}

}  // namespace

int form_content(const QuadraticForm3& f) {
  int best = -1;
  for (const auto& c : f.coefficients()) {
    if (c == 0) continue;
    const int v = valuation(c, f.p);
    if (best < 0 || v < best) best = v;
  }
  if (best < 0) throw InputError("zero form has no content");
  return best;
}

DiagonalForm diagonalize(const QuadraticForm3& f) {
  const Prime p = f.p;
  require_prime(p);
  if (p == 2) throw InputError("diagonalization unsupported at 2");

  Matrix3<Rational> M = f.symmetric().cast<Rational>();
  Matrix3<Rational> P = Matrix3<Rational>::Identity();
  const auto swap = [&](int i, int j) {
    if (i == j) return;
    M.row(i).swap(M.row(j));
    M.col(i).swap(M.col(j));
    P.row(i).swap(P.row(j));
  };
  int rank = 0;
  for (int k = 0; k < 3; ++k) {
    int bi = -1, bj = -1, bv = 0;
    for (int i = k; i < 3; ++i) {
      for (int j = k; j < 3; ++j) {
        if (M(i, j) == 0) continue;
        const int v = valuation(M(i, j), p);
        // ties prefer the diagonal
        if (bi < 0 || v < bv || (v == bv && i == j && bi != bj)) {
          bi = i;
          bj = j;
          bv = v;
        }
      }
    }
    if (bi < 0) break;
    if (bi != bj) {
      // p odd: the new diagonal entry M_ii + 2 M_ij + M_jj has valuation bv
      M.row(bi) += M.row(bj);
      M.col(bi) += M.col(bj);
      P.row(bi) += P.row(bj);
    }
    swap(k, bi);
    for (int r = k + 1; r < 3; ++r) {
      if (M(r, k) == 0) continue;
      const Rational factor = M(r, k) / M(k, k);
      M.row(r) -= factor * M.row(k);
      M.col(r) -= factor * M.col(k);
      P.row(r) -= factor * P.row(k);
    }
    ++rank;
  }

  // order present variables by exponent
  std::vector<int> order(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return valuation(M(a, a), p) < valuation(M(b, b), p);
  });
  for (int i = rank; i < 3; ++i) order.push_back(i);

  DiagonalForm out;
  out.p = p;
  int max_exponent = 0;
  for (int i = 0; i < rank; ++i) {
    const Rational c = M(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]) / 2;
    const int a = valuation(c, p);
    out.exponents.push_back(a);
    out.coefficients.push_back(c);
    out.unit_classes.push_back(square_class(c / ppow(p, a), p));
    max_exponent = std::max(max_exponent, a);
  }
  out.precision = 2 * max_exponent + 6;
  const Integer modulus = ipow(p, static_cast<unsigned>(out.precision));
  out.witness.p = p;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out.witness.matrix(i, j) = to_residue(P(order[static_cast<std::size_t>(i)], j), modulus);
    }
  }
  const Matrix3<Integer> check = out.witness.matrix * f.symmetric() * out.witness.matrix.transpose();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Integer target = (i == j && i < rank) ? to_residue(2 * out.coefficients[static_cast<std::size_t>(i)], modulus)
                                                  : Integer(0);
      if (mod_floor(check(i, j) - target, modulus) != 0) {
        throw VerificationError("diagonalization witness", "congruence fails at entry (" +
                                                               std::to_string(i + 1) + "," +
                                                               std::to_string(j + 1) + ")");
      }
    }
  }
  return out;
}

RationalFunction binary_zeta(SquareClass unit_class, int k, Prime p) {
  require_prime(p);
  if (p == 2) throw InputError("binary_zeta requires an odd prime");
  if (k < 0) throw InputError("k must be nonnegative");
  const Rational q = ppow(p, -1);
  RationalFunction z;
  int level = k % 2;
  if (level == 1) {
    z = RationalFunction::make(Polynomial(1 - q), Polynomial{1, -q});
  } else if (unit_class == SquareClass::square) {
    const auto base = RationalFunction::make(Polynomial(1 - q), Polynomial{1, -q});
    z = base * base;
  } else {
    z = RationalFunction::make(Polynomial(1 - q * q), Polynomial{1, 0, -q * q});
  }
  for (; level + 2 <= k; level += 2) z = monomial(q, 2) * z + RationalFunction(1 - q);
  return z;
}

namespace {

class DescentSolver {
 public:
  explicit DescentSolver(Prime p)
      : p_(p), cell_(ppow(p, -3)), tail_(smooth_tail(p)) {}

  RationalFunction solve(const QuadPoly& root) {
    const int id = visit(root);
    const Expr& e = exprs_[static_cast<std::size_t>(id)];
    if (!e.refs.empty()) throw VerificationError("descent", "unresolved references at the root");
    return e.constant;
  }

 private:
  static constexpr std::size_t kStateLimit = 50000;

  struct Expr {
    RationalFunction constant;
    std::map<int, RationalFunction> refs;
  };

  int visit(const QuadPoly& h) {
    if (auto it = index_.find(h); it != index_.end()) return it->second;
    if (exprs_.size() >= kStateLimit) throw InfeasibleError("descent state limit reached");
    const int id = static_cast<int>(exprs_.size());
    index_.emplace(h, id);
    exprs_.emplace_back();
    on_stack_.push_back(true);

    long nonzero = 0, smooth = 0;
    std::map<int, Polynomial> weights;
    std::vector<std::pair<QuadPoly, int>> children;
    detail::for_each_residue(h, p_, [&](const std::array<std::int64_t, 3>& a, ResidueKind kind) {
      if (kind == ResidueKind::nonzero) {
        ++nonzero;
      } else if (kind == ResidueKind::smooth) {
        ++smooth;
      } else {
        const QuadPoly moved = detail::translate(h, a, p_);
        const int e = detail::content_valuation(moved, p_);
        children.emplace_back(detail::divide(moved, ipow(p_, static_cast<unsigned>(e))), e);
      }
    });
    for (const auto& [child, e] : children) {
      const int cid = visit(child);
      weights[cid] += Polynomial::monomial(cell_, static_cast<std::size_t>(e));
    }

    Expr expr;
    expr.constant = RationalFunction(cell_ * nonzero) + RationalFunction(cell_ * smooth) * tail_;
    for (auto& [cid, w] : weights) expr.refs.emplace(cid, RationalFunction(w));
    substitute_finished(expr);
    if (auto self = expr.refs.find(id); self != expr.refs.end()) {
      const RationalFunction scale = RationalFunction(1L) / (RationalFunction(1L) - self->second);
      expr.refs.erase(self);
      expr.constant *= scale;
      for (auto& [cid, w] : expr.refs) w *= scale;
    }
    exprs_[static_cast<std::size_t>(id)] = std::move(expr);
    on_stack_[static_cast<std::size_t>(id)] = false;
    return id;
  }

  // Replaces references to finished states by their expressions until only
  // states on the current path remain.
  void substitute_finished(Expr& expr) const {
    for (;;) {
      auto it = std::find_if(expr.refs.begin(), expr.refs.end(), [&](const auto& kv) {
        return !on_stack_[static_cast<std::size_t>(kv.first)];
      });
      if (it == expr.refs.end()) return;
      const RationalFunction w = it->second;
      const Expr& sub = exprs_[static_cast<std::size_t>(it->first)];
      expr.refs.erase(it);
      expr.constant += w * sub.constant;
      for (const auto& [k, c] : sub.refs) {
        auto [pos, inserted] = expr.refs.emplace(k, w * c);
        if (!inserted) pos->second += w * c;
      }
    }
  }

  Prime p_;
  Rational cell_;
  RationalFunction tail_;
  std::map<QuadPoly, int> index_;
  std::vector<Expr> exprs_;
  std::vector<bool> on_stack_;
};

}  // namespace

RationalFunction descent_zeta(const QuadraticForm3& f) {
  require_prime(f.p);
  if (f.is_zero()) return RationalFunction();
  DescentSolver solver(f.p);
  return solver.solve(detail::from_form(f));
}

bool matches_counts(const RationalFunction& zeta, const QuadraticForm3& f, int level) {
  const auto poincare = (RationalFunction(1L) - RationalFunction::t() * zeta) /
                        RationalFunction(Polynomial{1, -1});
  const auto coeffs = series(poincare, static_cast<std::size_t>(level));
  Counter counter(f);
  for (int m = 0; m <= level; ++m) {
    if (coeffs[static_cast<std::size_t>(m)] != Rational(counter.affine(m)) * ppow(f.p, -3 * m)) return false;
  }
  return true;
}

IgusaResult reconstruct_from_counts(const QuadraticForm3& f) {
  const Prime p = f.p;
  require_prime(p);
  IgusaResult result;
  result.method = IgusaMethod::reconstruction;
  if (f.is_zero()) return result;
  const int content = form_content(f);
  const QuadraticForm3 g = divide_form(f, content);

  const Rational q = ppow(p, -1);
  const Polynomial Q = Polynomial::one_minus(q * q * q, 2) * Polynomial::one_minus(q, 1) *
                       Polynomial::one_minus(q, 2) * Polynomial::one_minus(q * q, 2);
  Counter counter(g);
  std::vector<Rational> c;  // c_m = N_m p^(-3m)
  const auto extend = [&](std::size_t n) {
    while (c.size() < n) {
      const int m = static_cast<int>(c.size());
      c.push_back(Rational(counter.affine(m)) * ppow(p, -3 * m));
    }
  };
  constexpr int kExtra = 4;
  for (int degree = 8; degree <= 14; degree += 2) {
    const std::size_t top = static_cast<std::size_t>(degree + kExtra);
    extend(top + 2);
    // Z = sum_k (c_k - c_(k+1)) t^k
    std::vector<Rational> z(top + 1);
    for (std::size_t k = 0; k <= top; ++k) z[k] = c[k] - c[k + 1];
    const Polynomial product = Q * Polynomial(z);
    bool consistent = true;
    for (std::size_t k = static_cast<std::size_t>(degree) + 1; k <= top; ++k) consistent &= product[k] == 0;
    if (!consistent) continue;
    result.zeta = RationalFunction::make(product.truncated(static_cast<std::size_t>(degree)), Q) *
                  monomial(1, static_cast<unsigned>(content));
    result.cone_zeta = RationalFunction(Polynomial::one_minus(q * q * q, 2)) * result.zeta;
    result.verification_level = static_cast<int>(top + 1);
    return result;
  }
  throw VerificationError("reconstruction inconsistent",
                          "counts do not fit the denominator ansatz for numerator degree <= 14");
}

IgusaResult igusa_zeta(const QuadraticForm3& f, const IgusaOptions& options) {
  const Prime p = f.p;
  require_prime(p);
  IgusaResult result;
  if (f.is_zero()) {
    result.method = IgusaMethod::closed_form;
    return result;
  }
  const int content = form_content(f);
  const QuadraticForm3 g = divide_form(f, content);
  const Rational q = ppow(p, -1);

  std::string failure;
  bool have = false;
  try {
    if (p != 2) {
      const DiagonalForm d = diagonalize(g);
      if (d.rank() == 1) {
        result.zeta = monomial(1, static_cast<unsigned>(d.exponents[0])) *
                      RationalFunction::make(Polynomial(1 - q), Polynomial::one_minus(q, 2));
        result.method = IgusaMethod::closed_form;
      } else if (d.rank() == 2) {
        const Rational u = -d.coefficients[0] * d.coefficients[1] /
                           ppow(p, d.exponents[0] + d.exponents[1]);
        result.zeta = monomial(1, static_cast<unsigned>(d.exponents[0])) *
                      binary_zeta(square_class(u, p), d.exponents[1] - d.exponents[0], p);
        result.method = IgusaMethod::recursion;
      } else {
        result.zeta = descent_zeta(g);
        result.method = IgusaMethod::fixed_point;
      }
    } else {
      result.zeta = descent_zeta(g);
      result.method = IgusaMethod::fixed_point;
    }
    have = matches_counts(result.zeta, g, options.verify_level);
    if (!have) failure = to_string(result.method) + " result disagrees with counts";
  } catch (const InfeasibleError& e) {
    failure = e.what();
  } catch (const VerificationError& e) {
    failure = e.what();
  }

  if (!have || options.cross_check_reconstruction) {
    IgusaResult rebuilt;
    try {
      rebuilt = reconstruct_from_counts(g);
    } catch (const VerificationError& e) {
      throw VerificationError("igusa evaluation failed", (failure.empty() ? "" : failure + "; ") + e.what());
    }
    if (have && rebuilt.zeta != result.zeta) {
      throw VerificationError("igusa evaluation failed",
                              to_string(result.method) + " and reconstruction disagree");
    }
    if (!have) result = rebuilt;
    result.verification_level = std::max(options.verify_level, rebuilt.verification_level);
  } else {
    result.verification_level = options.verify_level;
  }

  result.zeta = result.zeta * monomial(1, static_cast<unsigned>(content));
  result.cone_zeta = RationalFunction(Polynomial::one_minus(q * q * q, 2)) * result.zeta;
  return result;
}

}  // namespace lie3z
