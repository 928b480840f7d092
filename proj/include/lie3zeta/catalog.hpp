// Named three-dimensional Z_p-Lie algebras with their forms and known zeta functions.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lie3zeta/lie_algebra.hpp"
#include "lie3zeta/rational_function.hpp"

namespace lie3z {

/// Family parameters; unset values take the entry's defaults.
struct CatalogParams {
  std::optional<int> r;
  std::optional<Integer> d;
  /// Non-square unit; defaults to default_rho(p).
  std::optional<Integer> rho;
  int scale = 0;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  /// Human-readable parameter schema, e.g. "r: integer >= 1".
  std::vector<std::string> parameters;
  std::function<LieAlgebra3(Prime, const CatalogParams&)> builder;
  /// Form of the unscaled algebra, when displayed in closed form.
  std::function<std::optional<QuadraticForm3>(Prime, const CatalogParams&)> known_form;
  /// Published zeta function of the unscaled algebra.
  std::function<std::optional<RationalFunction>(Prime, const CatalogParams&)> known_zeta;
  std::function<bool(Prime)> valid_prime;
};

const std::vector<CatalogEntry>& catalog();

/// Throws InputError for unknown names.
const CatalogEntry& catalog_entry(std::string_view name);

/// Throws InputError for invalid parameter or prime combinations.
LieAlgebra3 catalog_get(std::string_view name, const CatalogParams& params, Prime p);
std::optional<QuadraticForm3> catalog_known_form(std::string_view name, const CatalogParams& params, Prime p);
std::optional<RationalFunction> catalog_known_zeta(std::string_view name, const CatalogParams& params, Prime p);

/// Algebra from the entries of R(y): coefficient vectors of L_12, L_13, L_23.
LieAlgebra3 from_relations(const RowVector3<Integer>& l12, const RowVector3<Integer>& l13,
                           const RowVector3<Integer>& l23);

struct CatalogInstance {
  std::string name;
  CatalogParams params;
  LieAlgebra3 algebra;
};

/// Every catalog algebra valid at p, with the soluble families instantiated for
/// r <= max_r (r >= 1 for L2) and d in ds.
std::vector<CatalogInstance> catalog_instances(Prime p, int max_r, const std::vector<Integer>& ds);

/// L4(0,1) and L5(0,1): x2^2 - p x3^2 and x2^2 - p rho x3^2 have discriminants in
/// different square classes, so the algebras are not isomorphic, yet their zeta
/// functions agree because the binary zeta at odd k ignores the unit class.
std::pair<CatalogInstance, CatalogInstance> isospectral_witness(Prime p);

/// d values {0, 1, rho, p, p rho} used for sweeps.
std::vector<Integer> standard_d_values(Prime p);

}  // namespace lie3z
