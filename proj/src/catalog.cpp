#include "lie3zeta/catalog.hpp"

#include "lie3zeta/zeta.hpp"

namespace lie3z {

namespace {

RowVector3<Integer> lin(const Integer& a, const Integer& b, const Integer& c) {
  RowVector3<Integer> v;
  v << a, b, c;
  return v;
}

QuadraticForm3 form(Prime p, const Integer& x11, const Integer& x12, const Integer& x13, const Integer& x22,
                    const Integer& x23, const Integer& x33) {
  return QuadraticForm3::from_coefficients({x11, x12, x13, x22, x23, x33}, p);
}

int param_r(const CatalogParams& params, int minimum) {
  const int r = params.r.value_or(minimum);
  if (r < minimum) throw InputError("parameter r must be >= " + std::to_string(minimum));
  return r;
}

Integer param_d(const CatalogParams& params) { return params.d.value_or(0); }

bool is_nonsquare_unit(const Integer& rho, Prime p) {
  if (p == 2) return mod_floor(rho, 8) == 5;
  return legendre(rho, p) == -1;
}

Integer param_rho(const CatalogParams& params, Prime p) {
  const Integer rho = params.rho.value_or(Integer(default_rho(p)));
  if (!is_nonsquare_unit(rho, p)) throw InputError("rho must be a non-square unit mod p");
  return rho;
}

bool any_prime(Prime) { return true; }

std::optional<QuadraticForm3> no_form(Prime, const CatalogParams&) { return std::nullopt; }
std::optional<RationalFunction> no_zeta(Prime, const CatalogParams&) { return std::nullopt; }

// [i,j] = k, [i,k] = rho j, [j,k] = -p i
LieAlgebra3 ijk_algebra(Prime p, const Integer& rho) {
  return from_relations(lin(0, 0, 1), lin(0, rho, 0), lin(-Integer(p), 0, 0));
}

// basis 2i, 2j, j + k
LieAlgebra3 ijk_alternative(Prime p, const Integer& rho) {
  Matrix3<Integer> basis;
  basis << 2, 0, 0, 0, 2, 0, 0, 1, 1;
  return rebase(ijk_algebra(p, rho), basis);
}

RationalFunction heisenberg_zeta(Prime p) {
  return local_riemann(p, 0, 1) * local_riemann(p, 1, 1) * local_riemann(p, 3, 2) * local_riemann(p, 2, 2) /
         local_riemann(p, 3, 3);
}

RationalFunction sl2_zeta(Prime p) {
  if (p == 2) {
    return local_riemann(p, 0, 1) * local_riemann(p, 1, 1) * local_riemann(p, 2, 2) * local_riemann(p, 1, 2) *
           RationalFunction(Polynomial{1, 0, 6, -8});
  }
  return local_riemann(p, 0, 1) * local_riemann(p, 1, 1) * local_riemann(p, 1, 2) * local_riemann(p, 2, 2) /
         local_riemann(p, 1, 3);
}

RationalFunction sl1_delta_zeta(Prime p) {
  const RationalFunction base = local_riemann(p, 0, 1) * local_riemann(p, 1, 2) * local_riemann(p, 2, 2);
  if (p == 2) return base * RationalFunction(Polynomial{1, 6, 6, -12});
  return base;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  out.push_back({"abelian", "abelian algebra Z_p^3 (L_0(infinity))", {},
                 [](Prime, const CatalogParams&) { return LieAlgebra3{}; },
                 [](Prime p, const CatalogParams&) -> std::optional<QuadraticForm3> { return form(p, 0, 0, 0, 0, 0, 0); },
                 [](Prime p, const CatalogParams&) -> std::optional<RationalFunction> { return zeta_abelian(p); },
                 any_prime});

  out.push_back({"heisenberg", "Heisenberg algebra L_0(0): [e1,e2] = e3", {},
                 [](Prime, const CatalogParams&) { return from_relations(lin(0, 0, 1), lin(0, 0, 0), lin(0, 0, 0)); },
                 [](Prime p, const CatalogParams&) -> std::optional<QuadraticForm3> { return form(p, 0, 0, 0, 0, 0, 1); },
                 [](Prime p, const CatalogParams&) -> std::optional<RationalFunction> { return heisenberg_zeta(p); },
                 any_prime});

  out.push_back({"sl2", "sl_2(Z_p): [e1,e2] = e3, [e1,e3] = -2e1, [e2,e3] = 2e2", {},
                 [](Prime, const CatalogParams&) {
                   return from_relations(lin(0, 0, 1), lin(-2, 0, 0), lin(0, 2, 0));
                 },
                 [](Prime p, const CatalogParams&) -> std::optional<QuadraticForm3> { return form(p, 0, 4, 0, 0, 0, 1); },
                 [](Prime p, const CatalogParams&) -> std::optional<RationalFunction> { return sl2_zeta(p); },
                 any_prime});

  out.push_back({"sl1_delta",
                 "sl_1 of the maximal order in the quaternion division algebra over Q_p; basis i, j, k for odd p "
                 "and 2i, 2j, j+k for p = 2",
                 {"rho: non-square unit (default: smallest non-residue, -3 for p = 2)"},
                 [](Prime p, const CatalogParams& params) {
                   const Integer rho = param_rho(params, p);
                   return p == 2 ? ijk_alternative(p, rho) : ijk_algebra(p, rho);
                 },
                 [](Prime p, const CatalogParams& params) -> std::optional<QuadraticForm3> {
                   const Integer rho = param_rho(params, p);
                   if (p == 2) return form(p, -2, 0, 0, 4, -4, 4);
                   return form(p, -Integer(p), 0, 0, -rho, 0, 1);
                 },
                 [](Prime p, const CatalogParams& params) -> std::optional<RationalFunction> {
                   param_rho(params, p);
                   return sl1_delta_zeta(p);
                 },
                 any_prime});

  out.push_back({"sl1_delta_alt", "sl1_delta in the basis 2i, 2j, j+k for every p",
                 {"rho: non-square unit (default: smallest non-residue, -3 for p = 2)"},
                 [](Prime p, const CatalogParams& params) { return ijk_alternative(p, param_rho(params, p)); },
                 no_form,
                 [](Prime p, const CatalogParams& params) -> std::optional<RationalFunction> {
                   param_rho(params, p);
                   return sl1_delta_zeta(p);
                 },
                 any_prime});

  out.push_back({"L1_0", "soluble L_1(0): R(y) with L_12 = -y2, L_13 = -y3", {},
                 [](Prime, const CatalogParams&) { return from_relations(lin(0, -1, 0), lin(0, 0, -1), lin(0, 0, 0)); },
                 [](Prime p, const CatalogParams&) -> std::optional<QuadraticForm3> { return form(p, 0, 0, 0, 0, 0, 0); },
                 [](Prime p, const CatalogParams&) -> std::optional<RationalFunction> { return zeta_abelian(p); },
                 any_prime});

  out.push_back({"L2", "soluble L_2(0,r,d): L_12 = -y2 - p^r d y3, L_13 = -p^r y2 - y3",
                 {"r: integer >= 1", "d: integer"},
                 [](Prime p, const CatalogParams& params) {
                   const Integer pr = ipow(p, static_cast<unsigned>(param_r(params, 1)));
                   const Integer d = param_d(params);
                   return from_relations(lin(0, -1, -pr * d), lin(0, -pr, -1), lin(0, 0, 0));
                 },
                 [](Prime p, const CatalogParams& params) -> std::optional<QuadraticForm3> {
                   const Integer pr = ipow(p, static_cast<unsigned>(param_r(params, 1)));
                   return form(p, 0, 0, 0, pr, 0, -pr * param_d(params));
                 },
                 no_zeta, any_prime});

  out.push_back({"L3", "soluble L_3(0,r,d): L_12 = -d y3, L_13 = -y2 - p^r y3", {"r: integer >= 0", "d: integer"},
                 [](Prime p, const CatalogParams& params) {
                   const Integer pr = ipow(p, static_cast<unsigned>(param_r(params, 0)));
                   return from_relations(lin(0, 0, -param_d(params)), lin(0, -1, -pr), lin(0, 0, 0));
                 },
                 [](Prime p, const CatalogParams& params) -> std::optional<QuadraticForm3> {
                   const Integer pr = ipow(p, static_cast<unsigned>(param_r(params, 0)));
                   return form(p, 0, 0, 0, 1, pr, -param_d(params));
                 },
                 no_zeta, any_prime});

  out.push_back({"L4", "soluble L_4(0,r): L_12 = -p^r y3, L_13 = -y2", {"r: integer >= 0"},
                 [](Prime p, const CatalogParams& params) {
                   const Integer pr = ipow(p, static_cast<unsigned>(param_r(params, 0)));
                   return from_relations(lin(0, 0, -pr), lin(0, -1, 0), lin(0, 0, 0));
                 },
                 [](Prime p, const CatalogParams& params) -> std::optional<QuadraticForm3> {
                   const Integer pr = ipow(p, static_cast<unsigned>(param_r(params, 0)));
                   return form(p, 0, 0, 0, 1, 0, -pr);
                 },
                 no_zeta, any_prime});

  out.push_back({"L5", "soluble L_5(0,r): L_12 = -p^r rho y3, L_13 = -y2",
                 {"r: integer >= 0", "rho: non-square unit (default: smallest non-residue, -3 for p = 2)"},
                 [](Prime p, const CatalogParams& params) {
                   const Integer prr = ipow(p, static_cast<unsigned>(param_r(params, 0))) * param_rho(params, p);
                   return from_relations(lin(0, 0, -prr), lin(0, -1, 0), lin(0, 0, 0));
                 },
                 [](Prime p, const CatalogParams& params) -> std::optional<QuadraticForm3> {
                   const Integer prr = ipow(p, static_cast<unsigned>(param_r(params, 0))) * param_rho(params, p);
                   return form(p, 0, 0, 0, 1, 0, -prr);
                 },
                 no_zeta, any_prime});
  return out;
}

}  // namespace

LieAlgebra3 from_relations(const RowVector3<Integer>& l12, const RowVector3<Integer>& l13,
                           const RowVector3<Integer>& l23) {
  LieAlgebra3 L;
  for (int k = 0; k < 3; ++k) {
    L.set_bracket(0, 1, k, l12(k));
    L.set_bracket(0, 2, k, l13(k));
    L.set_bracket(1, 2, k, l23(k));
  }
  return L;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw InputError("unknown catalog entry: " + std::string(name));
}

LieAlgebra3 catalog_get(std::string_view name, const CatalogParams& params, Prime p) {
  require_prime(p);
  const CatalogEntry& entry = catalog_entry(name);
  if (!entry.valid_prime(p)) throw InputError(entry.name + " is not defined at p = " + std::to_string(p));
  if (params.scale < 0) throw InputError("scale must be nonnegative");
  LieAlgebra3 L = entry.builder(p, params);
  L.scale = params.scale;
  L.label = entry.name;
  return L;
}

std::optional<QuadraticForm3> catalog_known_form(std::string_view name, const CatalogParams& params, Prime p) {
  require_prime(p);
  return catalog_entry(name).known_form(p, params);
}

std::optional<RationalFunction> catalog_known_zeta(std::string_view name, const CatalogParams& params, Prime p) {
  require_prime(p);
  return catalog_entry(name).known_zeta(p, params);
}

std::vector<Integer> standard_d_values(Prime p) {
  const Integer rho = default_rho(p);
  return {0, 1, rho, Integer(p), p * rho};
}

std::pair<CatalogInstance, CatalogInstance> isospectral_witness(Prime p) {
  CatalogParams params;
  params.r = 1;
  return {{"L4", params, catalog_get("L4", params, p)}, {"L5", params, catalog_get("L5", params, p)}};
}

std::vector<CatalogInstance> catalog_instances(Prime p, int max_r, const std::vector<Integer>& ds) {
  std::vector<CatalogInstance> out;
  const auto add = [&](const std::string& name, CatalogParams params) {
    out.push_back({name, params, catalog_get(name, params, p)});
  };
  for (const char* name : {"abelian", "heisenberg", "sl2", "sl1_delta", "sl1_delta_alt", "L1_0"}) add(name, {});
  for (int r = 0; r <= max_r; ++r) {
    CatalogParams params;
    params.r = r;
    add("L4", params);
    add("L5", params);
    for (const auto& d : ds) {
      params.d = d;
      if (r >= 1) add("L2", params);
      add("L3", params);
    }
  }
  return out;
}

}  // namespace lie3z
