#include "lie3zeta/serialize.hpp"

#include <sstream>

namespace lie3z {

namespace {

Rational rational_from(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("expected an integer or a decimal string, got " + v.dump());
}

Integer integer_from(const Json& v) {
  const Rational r = rational_from(v);
  if (boost::multiprecision::denominator(r) != 1) throw InputError("expected an integer, got " + v.dump());
  return boost::multiprecision::numerator(r);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int small_int(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  const long long x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    throw InputError(std::string(what) + " out of range");
  }
  return static_cast<int>(x);
}

Json pole_to_json(const PoleEntry& pole) {
  return Json{{"sigma", to_string(pole.sigma)},
              {"factor_mult", pole.factor_mult},
              {"real_root_order", pole.real_root_order},
              {"degree", pole.degree}};
}

constexpr const char* kMonomials[6] = {"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"};

}  // namespace

Json polynomial_to_json(const Polynomial& poly) {
  Json out = Json::array();
  for (const auto& c : poly.coefficients()) out.push_back(to_string(c));
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("polynomial must be an array of coefficients");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from(v));
  return Polynomial(std::move(c));
}

Json rational_function_to_json(const RationalFunction& r) {
  return Json{{"num", polynomial_to_json(r.numerator())}, {"den", polynomial_to_json(r.denominator())}};
}

RationalFunction rational_function_from_json(const Json& j) {
  const Polynomial den = polynomial_from_json(field(j, "den"));
  if (den.is_zero()) throw InputError("zero denominator");
  return RationalFunction::make(polynomial_from_json(field(j, "num")), den);
}

Json algebra_to_json(const LieAlgebra3& algebra, Prime p) {
  Json lambda = Json::array();
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const Integer& v = algebra.slices[k](i, j);
        if (v != 0) lambda.push_back(Json::array({i + 1, j + 1, k + 1, to_string(v)}));
      }
    }
  }
  Json out{{"p", p}, {"scale", algebra.scale}, {"lambda", lambda}};
  if (!algebra.label.empty()) out["label"] = algebra.label;
  return out;
}

AlgebraInput algebra_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("algebra JSON must be an object");
  AlgebraInput out;
  const long long p = small_int(field(j, "p"), "p");
  require_prime(p);
  out.p = p;
  if (j.contains("scale")) out.algebra.scale = small_int(j.at("scale"), "scale");
  if (out.algebra.scale < 0) throw InputError("scale must be nonnegative");
  if (j.contains("label") && j.at("label").is_string()) out.algebra.label = j.at("label").get<std::string>();
  const Json& lambda = field(j, "lambda");
  if (!lambda.is_array()) throw InputError("lambda must be an array of [i, j, k, value] entries");
  std::vector<std::array<int, 3>> raw_index;
  std::vector<Integer> raw_value;
  for (const auto& entry : lambda) {
    if (!entry.is_array() || entry.size() != 4) throw InputError("lambda entry must be [i, j, k, value]: " + entry.dump());
    std::array<int, 3> idx{};
    for (int a = 0; a < 3; ++a) {
      idx[a] = small_int(entry[a], "lambda index") - 1;
      if (idx[a] < 0 || idx[a] > 2) throw InputError("lambda index out of range 1..3: " + entry.dump());
    }
    const Integer v = integer_from(entry[3]);
    if (idx[0] < idx[1]) {
      out.algebra.set_bracket(idx[0], idx[1], idx[2], v);
    } else {
      raw_index.push_back(idx);
      raw_value.push_back(v);
    }
  }
  for (std::size_t e = 0; e < raw_index.size(); ++e) {
    const auto& [i, jj, k] = raw_index[e];
    out.algebra.slices[k](i, jj) = raw_value[e];
  }
  return out;
}

std::string form_to_string(const QuadraticForm3& f) {
  const auto c = f.coefficients();
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m < 6; ++m) {
    if (c[m] == 0) continue;
    const Integer mag = c[m] < 0 ? Integer(-c[m]) : c[m];
    if (first) {
      if (c[m] < 0) os << "-";
    } else {
      os << (c[m] < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << to_string(mag) << "*";
    os << kMonomials[m];
  }
  if (first) os << "0";
  return os.str();
}

Json form_to_json(const QuadraticForm3& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(to_string(c));
  return Json{{"p", f.p},
              {"monomials", Json::array({"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"})},
              {"coefficients", coeffs},
              {"polynomial", form_to_string(f)}};
}

Json igusa_to_json(const IgusaResult& r) {
  return Json{{"zeta", rational_function_to_json(r.zeta)},
              {"cone_zeta", rational_function_to_json(r.cone_zeta)},
              {"method", to_string(r.method)},
              {"verified_to", r.verification_level}};
}

Json poles_to_json(const PoleAnalysis& analysis) {
  Json poles = Json::array();
  for (const auto& pole : analysis.poles) poles.push_back(pole_to_json(pole));
  Json orders = Json::object();
  for (const auto& [sigma, order] : analysis.real_pole_orders) orders[to_string(sigma)] = order;
  Json violations = Json::array();
  for (const auto& v : analysis.violations) violations.push_back(to_string(v));
  return Json{{"poles", poles},
              {"abscissa", analysis.abscissa ? Json(to_string(*analysis.abscissa)) : Json(nullptr)},
              {"real_pole_orders", orders},
              {"violations", violations}};
}

Json report_to_json(const ZetaReport& r) {
  Json out{{"p", r.p}, {"scale", r.scale}, {"zeta", rational_function_to_json(r.zeta)}};
  const Json poles = poles_to_json(r.poles);
  out["poles"] = poles.at("poles");
  out["abscissa"] = poles.at("abscissa");
  out["real_pole_orders"] = poles.at("real_pole_orders");
  Json coeffs = Json::array();
  for (const auto& a : r.coefficients) coeffs.push_back(to_string(a));
  out["coefficients"] = coeffs;
  out["igusa"] = igusa_to_json(r.igusa);
  return out;
}

ParsedReport report_from_json(const Json& j) {
  ParsedReport out;
  out.p = small_int(field(j, "p"), "p");
  out.scale = small_int(field(j, "scale"), "scale");
  out.zeta = rational_function_from_json(field(j, "zeta"));
  for (const auto& pj : field(j, "poles")) {
    PoleEntry pole;
    pole.sigma = rational_from(field(pj, "sigma"));
    pole.factor_mult = small_int(field(pj, "factor_mult"), "factor_mult");
    pole.real_root_order = small_int(field(pj, "real_root_order"), "real_root_order");
    if (pj.contains("degree")) pole.degree = small_int(pj.at("degree"), "degree");
    out.poles.push_back(pole);
  }
  const Json& abscissa = field(j, "abscissa");
  if (!abscissa.is_null()) out.abscissa = rational_from(abscissa);
  for (const auto& a : field(j, "coefficients")) out.coefficients.push_back(integer_from(a));
  return out;
}

Json count_to_json(const CountProfile& c) {
  return Json{{"p", c.p}, {"m", c.level}, {"N", to_string(c.affine_count)}, {"Nstar", to_string(c.cone_count)}};
}

Json oracle_to_json(const OracleCount& c) {
  return Json{{"p", c.p}, {"n", c.n}, {"subalgebras", to_string(c.subalgebras)}, {"sublattices", to_string(c.sublattices)}};
}

}  // namespace lie3z
