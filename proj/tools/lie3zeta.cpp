// Command-line front end: lie3zeta <command> [options]
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lie3zeta/catalog.hpp"
#include "lie3zeta/counting.hpp"
#include "lie3zeta/oracle.hpp"
#include "lie3zeta/serialize.hpp"
#include "lie3zeta/zeta.hpp"

using namespace lie3z;

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

struct Source {
  std::string catalog;
  std::string input;
  std::optional<long long> prime;
  std::optional<int> scale;
  std::optional<int> r;
  std::string d;
  std::string rho;
};

struct Settings {
  Source source;
  int terms = 10;
  std::string format = "json";
  int verify_level = 4;
  int oracle_level = 4;
  int count_level = 4;
  std::string emit_name;
};

Integer parse_integer(const std::string& text, const char* what) {
  const Rational r = parse_rational(text);
  if (boost::multiprecision::denominator(r) != 1) throw InputError(std::string(what) + " must be an integer");
  return boost::multiprecision::numerator(r);
}

CatalogParams catalog_params(const Source& s) {
  CatalogParams params;
  params.r = s.r;
  if (!s.d.empty()) params.d = parse_integer(s.d, "d");
  if (!s.rho.empty()) params.rho = parse_integer(s.rho, "rho");
  params.scale = s.scale.value_or(0);
  return params;
}

struct Loaded {
  LieAlgebra3 algebra;
  Prime p = 2;
  std::string catalog_name;
  CatalogParams params;
};

Loaded load(const Source& s) {
  if (s.catalog.empty() == s.input.empty()) throw InputError("give exactly one of --catalog and --input");
  Loaded out;
  if (!s.catalog.empty()) {
    if (!s.prime) throw InputError("--catalog needs -p");
    out.p = *s.prime;
    out.params = catalog_params(s);
    out.algebra = catalog_get(s.catalog, out.params, out.p);
    out.catalog_name = s.catalog;
  } else {
    std::ifstream in(s.input);
    if (!in) throw InputError("cannot read " + s.input);
    const auto parsed = algebra_from_json(Json::parse(in));
    out.algebra = parsed.algebra;
    out.p = parsed.p;
    if (s.prime && *s.prime != out.p) throw InputError("-p disagrees with the prime in " + s.input);
    if (s.scale) out.algebra.scale = *s.scale;
  }
  require_prime(out.p);
  validate(out.algebra);
  return out;
}

std::string latex_form(const QuadraticForm3& f) {
  std::string text = form_to_string(f);
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'x' && i + 1 < text.size()) {
      out += "x_";
      out += text[++i];
    } else if (text[i] == '*') {
      out += ' ';
    } else {
      out += text[i];
    }
  }
  return out;
}

void check_format(const std::string& format) {
  if (format != "json" && format != "latex" && format != "plain") throw InputError("unknown format " + format);
}

int run_compute(const Settings& st) {
  const Loaded in = load(st.source);
  ZetaOptions o;
  o.terms = st.terms;
  o.igusa.verify_level = st.verify_level;
  const ZetaReport report = subalgebra_zeta(in.algebra, in.p, o);
  if (st.format == "latex") {
    std::cout << to_latex(report.zeta, in.p) << "\n";
  } else if (st.format == "plain") {
    std::cout << to_plain(report.zeta, in.p) << "\n";
    for (std::size_t k = 0; k < report.coefficients.size(); ++k) {
      std::cout << "a_" << k << " = " << to_string(report.coefficients[k]) << "\n";
    }
  } else {
    std::cout << report_to_json(report).dump() << "\n";
  }
  return 0;
}

int run_form(const Settings& st) {
  const Loaded in = load(st.source);
  const QuadraticForm3 f = extract_form(in.algebra, in.p);
  if (st.format == "latex") {
    std::cout << latex_form(f) << "\n";
  } else if (st.format == "plain") {
    std::cout << form_to_string(f) << "\n";
  } else {
    std::cout << form_to_json(f).dump() << "\n";
  }
  return 0;
}

int run_igusa(const Settings& st) {
  const Loaded in = load(st.source);
  IgusaOptions o;
  o.verify_level = st.verify_level;
  LieAlgebra3 base = in.algebra;
  base.scale = 0;
  const IgusaResult r = igusa_zeta(extract_form(base, in.p), o);
  if (st.format == "latex") {
    std::cout << to_latex(r.zeta, in.p) << "\n";
  } else if (st.format == "plain") {
    std::cout << to_string(r.zeta) << "\n";
  } else {
    std::cout << igusa_to_json(r).dump() << "\n";
  }
  return 0;
}

int run_poles(const Settings& st) {
  const Loaded in = load(st.source);
  ZetaOptions o;
  o.terms = 0;
  o.igusa.verify_level = st.verify_level;
  const ZetaReport report = subalgebra_zeta(in.algebra, in.p, o);
  if (st.format == "json") {
    Json j{{"p", in.p}, {"scale", in.algebra.scale}};
    j.update(poles_to_json(report.poles));
    std::cout << j.dump() << "\n";
    return 0;
  }
  for (const auto& pole : report.poles.poles) {
    std::cout << "sigma = " << to_string(pole.sigma) << "  factor_mult = " << pole.factor_mult
              << "  real_root_order = " << pole.real_root_order << "\n";
  }
  std::cout << "abscissa = " << (report.poles.abscissa ? to_string(*report.poles.abscissa) : "none") << "\n";
  return 0;
}

int run_count(const Settings& st) {
  const Loaded in = load(st.source);
  Counter counter(extract_form(in.algebra, in.p));
  for (int m = 0; m <= st.count_level; ++m) std::cout << count_to_json(counter.profile(m)).dump() << "\n";
  return 0;
}

int run_oracle(const Settings& st) {
  const Loaded in = load(st.source);
  for (int n = 0; n <= st.oracle_level; ++n) {
    std::cout << oracle_to_json(count_subalgebras(in.algebra, in.p, n)).dump() << "\n";
  }
  return 0;
}

struct Check {
  std::string identity;
  bool passed = false;
  std::string detail;
};

template <class F>
Check attempt(const std::string& identity, F&& body) {
  Check c{identity, false, ""};
  try {
    c.detail = body();
    c.passed = c.detail.empty();
  } catch (const VerificationError& e) {
    c.detail = e.what();
  }
  return c;
}

int run_verify(const Settings& st) {
  const Loaded in = load(st.source);
  const Prime p = in.p;
  std::vector<Check> checks;
  ZetaOptions o;
  o.terms = std::max(st.terms, st.oracle_level);
  o.igusa.verify_level = st.verify_level;
  o.igusa.cross_check_reconstruction = true;

  std::optional<ZetaReport> report;
  checks.push_back(attempt("igusa evaluation", [&]() -> std::string {
    report = subalgebra_zeta(in.algebra, p, o);
    return {};
  }));
  if (report) {
    const LieAlgebra3 folded = with_scale_applied(in.algebra, p);
    const QuadraticForm3 f = extract_form(folded, p);
    const IgusaResult scaled_igusa = igusa_zeta(f, o.igusa);

    checks.push_back(attempt("route equality", [&]() -> std::string {
      return zeta_via_cases(folded, p, o.igusa) == report->zeta ? "" : "case decomposition differs from assembly";
    }));
    checks.push_back(attempt("count consistency", [&]() -> std::string {
      if (!matches_counts(scaled_igusa.zeta, f, st.verify_level)) return "Poincare series differs from N_m";
      Counter counter(f);
      for (int m = 2; m <= st.verify_level; ++m) {
        if (counter.affine(m) != counter.cone(m) + ipow(p, 3) * counter.affine(m - 2)) {
          return "N_m != N*_m + p^3 N_(m-2) at m = " + std::to_string(m);
        }
      }
      return {};
    }));
    checks.push_back(attempt("coefficient sanity", [&]() -> std::string {
      const auto abelian = dirichlet_coefficients(zeta_abelian(p), o.terms);
      for (std::size_t k = 0; k < report->coefficients.size(); ++k) {
        if (report->coefficients[k] > abelian[k]) return "a_" + std::to_string(k) + " exceeds the lattice count";
      }
      return report->coefficients.at(0) == 1 ? "" : "a_0 != 1";
    }));
    checks.push_back(attempt("pole confinement", [&]() -> std::string {
      return report->poles.violations.empty() ? "" : "pole outside {0, 1/2, 1, 3/2, 2}";
    }));
    if (!in.catalog_name.empty() && in.algebra.scale == 0) {
      if (const auto known = catalog_known_zeta(in.catalog_name, in.params, p)) {
        checks.push_back(attempt("known formula", [&]() -> std::string {
          return *known == report->zeta ? "" : "differs from the published formula";
        }));
      }
    }
    checks.push_back(attempt("oracle comparison", [&]() -> std::string {
      for (int n = 0; n <= st.oracle_level; ++n) {
        const Integer count = count_subalgebras(in.algebra, p, n).subalgebras;
        if (count != report->coefficients.at(static_cast<std::size_t>(n))) {
          return "n = " + std::to_string(n) + ": oracle " + to_string(count) + ", zeta " +
                 to_string(report->coefficients[static_cast<std::size_t>(n)]);
        }
      }
      return {};
    }));
  }

  bool passed = true;
  Json list = Json::array();
  for (const auto& c : checks) {
    passed = passed && c.passed;
    Json j{{"identity", c.identity}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    list.push_back(j);
  }
  Json out{{"p", p}, {"scale", in.algebra.scale}, {"passed", passed}, {"checks", list}};
  if (!passed) {
    for (const auto& c : checks) {
      if (!c.passed) {
        out["failed"] = c.identity;
        break;
      }
    }
  }
  std::cout << out.dump() << "\n";
  return passed ? 0 : kExitVerification;
}

int run_catalog_list(const Settings& st) {
  if (st.format == "json") {
    Json out = Json::array();
    for (const auto& e : catalog()) out.push_back(Json{{"name", e.name}, {"description", e.description}, {"parameters", e.parameters}});
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (const auto& e : catalog()) {
    std::cout << e.name << "  " << e.description << "\n";
    for (const auto& param : e.parameters) std::cout << "    " << param << "\n";
  }
  return 0;
}

int run_catalog_emit(const Settings& st) {
  Source s = st.source;
  s.catalog = st.emit_name;
  s.input.clear();
  const Loaded in = load(s);
  std::cout << algebra_to_json(in.algebra, in.p).dump() << "\n";
  return 0;
}

void print_error(const char* kind, const std::string& detail, const std::string& identity = {}) {
  Json j{{"error", kind}};
  if (!identity.empty()) j["identity"] = identity;
  j["detail"] = detail;
  std::cerr << j.dump() << "\n";
}

void add_source(CLI::App* cmd, Settings& st) {
  cmd->add_option("--catalog", st.source.catalog, "catalog entry name");
  cmd->add_option("--input", st.source.input, "algebra JSON file");
  cmd->add_option("-p,--prime", st.source.prime, "prime");
  cmd->add_option("--scale", st.source.scale, "scale i, computing the zeta function of p^i L")->check(CLI::Range(0, 64));
  cmd->add_option("--r", st.source.r, "family parameter r");
  cmd->add_option("--d", st.source.d, "family parameter d");
  cmd->add_option("--rho", st.source.rho, "non-square unit rho");
  cmd->add_option("--format", st.format, "json, latex or plain")->check(CLI::IsMember({"json", "latex", "plain"}));
  cmd->add_option("--verify-level", st.verify_level, "levels m checked against N_m")->check(CLI::Range(0, 12));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact subalgebra zeta functions of three-dimensional Z_p-Lie algebras"};
  app.require_subcommand(1);
  Settings st;

  auto* compute = app.add_subcommand("compute", "subalgebra zeta function with poles and coefficients");
  add_source(compute, st);
  compute->add_option("--terms", st.terms, "number of Dirichlet coefficients")->check(CLI::Range(0, 200));

  auto* form = app.add_subcommand("form", "associated ternary quadratic form");
  add_source(form, st);

  auto* igusa = app.add_subcommand("igusa", "Igusa zeta function of the form of the unscaled algebra");
  add_source(igusa, st);

  auto* poles = app.add_subcommand("poles", "pole analysis of the zeta function");
  add_source(poles, st);

  auto* count = app.add_subcommand("count", "solution counts N_m and N*_m of f = 0 mod p^m");
  add_source(count, st);
  count->add_option("--level", st.count_level, "largest m")->check(CLI::Range(0, 12));

  auto* oracle = app.add_subcommand("oracle", "brute-force subalgebra counts by index p^n");
  add_source(oracle, st);
  oracle->add_option("--oracle-level", st.oracle_level, "largest n")->check(CLI::Range(0, 12));

  auto* verify = app.add_subcommand("verify", "run every cross-check");
  add_source(verify, st);
  verify->add_option("--terms", st.terms, "number of Dirichlet coefficients")->check(CLI::Range(0, 200));
  verify->add_option("--oracle-level", st.oracle_level, "largest n for the oracle comparison")->check(CLI::Range(0, 12));

  auto* cat = app.add_subcommand("catalog", "built-in algebras");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "list entries with their parameters");
  list->add_option("--format", st.format, "json or plain")->check(CLI::IsMember({"json", "plain"}));
  auto* emit = cat->add_subcommand("emit", "write the algebra JSON of an entry");
  emit->add_option("name", st.emit_name, "entry name")->required();
  emit->add_option("-p,--prime", st.source.prime, "prime")->required();
  emit->add_option("--scale", st.source.scale, "scale")->check(CLI::Range(0, 64));
  emit->add_option("--r", st.source.r, "family parameter r");
  emit->add_option("--d", st.source.d, "family parameter d");
  emit->add_option("--rho", st.source.rho, "non-square unit rho");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    check_format(st.format);
    if (compute->parsed()) return run_compute(st);
    if (form->parsed()) return run_form(st);
    if (igusa->parsed()) return run_igusa(st);
    if (poles->parsed()) return run_poles(st);
    if (count->parsed()) return run_count(st);
    if (oracle->parsed()) return run_oracle(st);
    if (verify->parsed()) return run_verify(st);
    if (list->parsed()) return run_catalog_list(st);
    if (emit->parsed()) return run_catalog_emit(st);
  } catch (const VerificationError& e) {
    print_error("verification failure", e.what(), e.identity());
    return kExitVerification;
  } catch (const InputError& e) {
    print_error("input error", e.what());
    return kExitInput;
  } catch (const InfeasibleError& e) {
    print_error("infeasible", e.what());
    return kExitInput;
  } catch (const Json::exception& e) {
    print_error("input error", e.what());
    return kExitInput;
  }
  return kExitInput;
}
