// JSON encodings. Integers and rationals are decimal strings ("num/den").
#pragma once

#include <string>

#include "json.hpp"
#include "lie3zeta/counting.hpp"
#include "lie3zeta/igusa.hpp"
#include "lie3zeta/lie_algebra.hpp"
#include "lie3zeta/oracle.hpp"
#include "lie3zeta/rational_function.hpp"
#include "lie3zeta/zeta.hpp"

namespace lie3z {

using Json = nlohmann::ordered_json;

/// Coefficient strings, ascending by degree.
Json polynomial_to_json(const Polynomial& poly);
Polynomial polynomial_from_json(const Json& j);

/// {"num": [...], "den": [...]}
Json rational_function_to_json(const RationalFunction& r);
RationalFunction rational_function_from_json(const Json& j);

struct AlgebraInput {
  LieAlgebra3 algebra;
  Prime p = 2;
};

/// {"p": int, "scale": int, "lambda": [[i, j, k, value], ...]}, 1-based, i < j only.
Json algebra_to_json(const LieAlgebra3& algebra, Prime p);
/// Entries with i < j are completed antisymmetrically; others are stored as
/// given so that validate() reports them. Throws InputError on schema errors.
AlgebraInput algebra_from_json(const Json& j);

/// {"p", "coefficients": [x1^2, x1x2, x1x3, x2^2, x2x3, x3^2], "polynomial"}
Json form_to_json(const QuadraticForm3& f);
std::string form_to_string(const QuadraticForm3& f);

/// {"zeta", "cone_zeta", "method", "verified_to"}
Json igusa_to_json(const IgusaResult& r);

/// {"p", "scale", "zeta", "poles", "abscissa", "real_pole_orders", "coefficients", "igusa"}
Json report_to_json(const ZetaReport& r);

struct ParsedReport {
  Prime p = 2;
  int scale = 0;
  RationalFunction zeta;
  std::vector<PoleEntry> poles;
  std::optional<Rational> abscissa;
  std::vector<Integer> coefficients;
};
ParsedReport report_from_json(const Json& j);

Json poles_to_json(const PoleAnalysis& analysis);

/// {"p", "m", "N", "Nstar"}
Json count_to_json(const CountProfile& c);
/// {"p", "n", "subalgebras", "sublattices"}
Json oracle_to_json(const OracleCount& c);

}  // namespace lie3z
