// End-to-end acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "lie3zeta/catalog.hpp"
#include "lie3zeta/counting.hpp"
#include "lie3zeta/oracle.hpp"
#include "lie3zeta/zeta.hpp"
#include "support.hpp"

using namespace lie3z;
using lie3z::testing::binary_class;
using lie3z::testing::random_algebra;
using lie3z::testing::random_unimodular;
using lie3z::testing::uniform;

namespace {

// Collects the first few failures of a criterion.
struct Failures {
  int count = 0;
  std::ostringstream detail;

  void add(const std::string& what) {
    if (count++ < 3) detail << (count > 1 ? "; " : "") << what;
  }
  bool ok() const { return count == 0; }
};

std::string where(const std::string& name, Prime p, const CatalogParams& params = {}) {
  std::ostringstream os;
  os << name << " p=" << p;
  if (params.r) os << " r=" << *params.r;
  if (params.d) os << " d=" << *params.d;
  return os.str();
}

// 1/(1 - p^a t^b) from explicit coefficients
RationalFunction zp(Prime p, int a, int b) {
  std::vector<Rational> den(static_cast<std::size_t>(b) + 1, Rational(0));
  den[0] = 1;
  den[static_cast<std::size_t>(b)] = -Rational(ipow(p, static_cast<unsigned>(a)));
  return RationalFunction::make(Polynomial(1), Polynomial(std::move(den)));
}

RationalFunction zeta_of(const LieAlgebra3& L, Prime p, int terms = 0) {
  ZetaOptions o;
  o.terms = terms;
  return subalgebra_zeta(L, p, o).zeta;
}

void formula_regression(Failures& f) {
  const auto check = [&](const char* name, Prime p, const RationalFunction& expected) {
    if (zeta_of(catalog_get(name, {}, p), p) != expected) f.add(where(name, p));
  };
  for (Prime p : {3, 5, 7}) {
    check("heisenberg", p,
          zp(p, 0, 1) * zp(p, 1, 1) * zp(p, 3, 2) * zp(p, 2, 2) * RationalFunction(Polynomial::one_minus(ipow(p, 3), 3)));
    check("sl2", p,
          zp(p, 0, 1) * zp(p, 1, 1) * zp(p, 1, 2) * zp(p, 2, 2) * RationalFunction(Polynomial::one_minus(Rational(p), 3)));
    check("sl1_delta", p, zp(p, 0, 1) * zp(p, 1, 2) * zp(p, 2, 2));
  }
  check("sl2", 2, zp(2, 0, 1) * zp(2, 1, 1) * zp(2, 2, 2) * zp(2, 1, 2) * RationalFunction(Polynomial{1, 0, 6, -8}));
  check("sl1_delta", 2, zp(2, 0, 1) * zp(2, 1, 2) * zp(2, 2, 2) * RationalFunction(Polynomial{1, 6, 6, -12}));
}

void oracle_equivalence(Failures& f) {
  for (Prime p : {2, 3}) {
    const int max_n = p == 2 ? 6 : 5;
    for (const auto& inst : catalog_instances(p, 2, standard_d_values(p))) {
      ZetaOptions o;
      o.terms = max_n;
      const auto a = subalgebra_zeta(inst.algebra, p, o).coefficients;
      for (int n = 0; n <= max_n; ++n) {
        if (count_subalgebras(inst.algebra, p, n).subalgebras != a[static_cast<std::size_t>(n)]) {
          f.add(where(inst.name, p, inst.params) + " n=" + std::to_string(n));
        }
      }
    }
  }
}

void counting_identities(Failures& f) {
  constexpr int level = 4;
  for (Prime p : {2, 3, 5}) {
    const RationalFunction t = RationalFunction::t();
    const RationalFunction one_minus_t(Polynomial{1, -1});
    for (const auto& inst : catalog_instances(p, 2, standard_d_values(p))) {
      const QuadraticForm3 form = extract_form(inst.algebra, p);
      const IgusaResult z = igusa_zeta(form);
      const auto P = series((RationalFunction(1L) - t * z.zeta) / one_minus_t, level);
      const auto Pstar =
          series((RationalFunction(1L) - RationalFunction(ppow(p, -3)) * t - t * z.cone_zeta) / one_minus_t, level);
      if (poincare_truncation(form, level, false) != P) f.add("P_f " + where(inst.name, p, inst.params));
      if (poincare_truncation(form, level, true) != Pstar) f.add("P*_f " + where(inst.name, p, inst.params));
      Counter counter(form);
      for (int m = 2; m <= 4; ++m) {
        if (counter.affine(m) != counter.cone(m) + ipow(p, 3) * counter.affine(m - 2)) {
          f.add("N_m recursion " + where(inst.name, p, inst.params) + " m=" + std::to_string(m));
        }
      }
    }
  }
}

void route_equality(Failures& f) {
  for (Prime p : {2, 3, 5}) {
    for (const auto& inst : catalog_instances(p, 2, standard_d_values(p))) {
      if (zeta_via_cases(inst.algebra, p) != zeta_of(inst.algebra, p)) f.add(where(inst.name, p, inst.params));
    }
  }
}

void pole_confinement(Failures& f) {
  for (Prime p : {2, 3, 5}) {
    for (const auto& inst : catalog_instances(p, 2, standard_d_values(p))) {
      if (!analyze_poles(zeta_of(inst.algebra, p), p).violations.empty()) f.add(where(inst.name, p, inst.params));
    }
    for (int trial = 0; trial < 200; ++trial) {
      const auto L = random_algebra(9);
      if (!analyze_poles(zeta_of(L, p), p).violations.empty()) f.add("random tensor p=" + std::to_string(p));
    }
  }
  for (Prime p : {3, 5}) {
    const Integer rho = default_rho(p);
    for (const auto& inst : catalog_instances(p, 3, {1, rho, Integer(p), p * rho})) {
      if (inst.name != "L2" && inst.name != "L3" && inst.name != "L4" && inst.name != "L5") continue;
      const auto cls = binary_class(extract_form(inst.algebra, p));
      const auto poles = analyze_poles(zeta_of(inst.algebra, p), p);
      if (!cls || !poles.abscissa || *poles.abscissa != 1) {
        f.add("abscissa " + where(inst.name, p, inst.params));
        continue;
      }
      const int expected = cls->square && cls->k % 2 == 0 ? 3 : 2;
      const auto it = poles.real_pole_orders.find(Rational(1));
      if (it == poles.real_pole_orders.end() || it->second != expected) f.add("order " + where(inst.name, p, inst.params));
    }
  }
}

void scaling_laws(Failures& f) {
  for (Prime p : {2, 3}) {
    for (const char* name : {"heisenberg", "sl2", "L4"}) {
      CatalogParams params;
      if (std::string(name) == "L4") params.r = 1;
      const LieAlgebra3 base = catalog_get(name, params, p);
      const QuadraticForm3 form = extract_form(base, p);
      const RationalFunction Z = igusa_zeta(form).zeta;
      QuadraticForm3 pf = form;
      pf.matrix *= Integer(p);
      if (igusa_zeta(pf).zeta != RationalFunction::t() * Z) f.add(std::string("Z(pf) ") + where(name, p));
      for (int i = 1; i <= 2; ++i) {
        LieAlgebra3 L = base;
        L.scale = i;
        const RationalFunction theorem = zeta_of(L, p);
        if (theorem != assemble_zeta(Z, p, i)) f.add(std::string("assembly ") + where(name, p));
        // p^i L with the scale folded into the structure constants
        if (theorem != zeta_of(with_scale_applied(L, p), p)) f.add(std::string("recompute ") + where(name, p));
      }
    }
  }
}

void determinant_lemma(Failures& f) {
  for (int trial = 0; trial < 500; ++trial) {
    const Prime p = std::array<Prime, 3>{2, 3, 5}[static_cast<std::size_t>(uniform(0, 2))];
    const auto L = random_algebra(9);
    const Matrix3<Integer> alpha = random_unimodular(8);
    if (!check_coset_lemma(L, alpha, p, 4)) f.add("trial " + std::to_string(trial));
  }
}

void equivalence_invariance(Failures& f) {
  constexpr Prime p = 3;
  CatalogParams l3;
  l3.r = 0;
  l3.d = default_rho(p);
  const std::vector<std::pair<std::string, CatalogParams>> entries{{"heisenberg", {}}, {"sl2", {}}, {"L3", l3}};
  for (const auto& [name, params] : entries) {
    const LieAlgebra3 L = catalog_get(name, params, p);
    const QuadraticForm3 form = extract_form(L, p);
    const RationalFunction Z = igusa_zeta(form).zeta;
    for (int trial = 0; trial < 50; ++trial) {
      BasisChange P;
      P.p = p;
      P.matrix = random_unimodular(8);
      const QuadraticForm3 changed = extract_form(change_basis(L, P), p);
      if (!(changed == transform_form(form, P))) f.add("extract " + where(name, p));
      if (igusa_zeta(changed).zeta != Z) f.add("igusa " + where(name, p));
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Failures&)> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {"formula regression", formula_regression, 5},
      {"oracle equivalence", oracle_equivalence, 600},
      {"counting identity suite", counting_identities, 120},
      {"route equality", route_equality, 10},
      {"pole confinement and soluble pole orders", pole_confinement, 300},
      {"scaling laws", scaling_laws, 30},
      {"determinant-lemma property sweep", determinant_lemma, 10},
      {"equivalence invariance", equivalence_invariance, 60},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Failures f;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(f);
    } catch (const std::exception& e) {
      f.add(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criteria[i].budget_seconds) {
      f.add("runtime " + std::to_string(seconds) + " s over " + std::to_string(criteria[i].budget_seconds) + " s");
    }
    std::printf("%s %zu %s (%.2f s)", f.ok() ? "PASS" : "FAIL", i + 1, criteria[i].name, seconds);
    if (!f.ok()) std::printf(": %d failure(s): %s", f.count, f.detail.str().c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!f.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
