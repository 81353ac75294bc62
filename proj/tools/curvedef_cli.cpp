#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "curvedef/cech.hpp"
#include "curvedef/critical.hpp"
#include "curvedef/exprparse.hpp"
#include "curvedef/gluing.hpp"
#include "curvedef/laufer.hpp"
#include "curvedef/superpotential.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace curvedef;

// Exit codes: 0 success, 1 usage/IO, 2 validation, 3 integrability failure,
// 4 superpotential on non-CY input, 5 expression parse error.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIntegrability = 3;
constexpr int kExitNotCY = 4;
constexpr int kExitParse = 5;

struct ExitWith {
  int code;
  std::string reason;
};

struct Options {
  std::string input;
  int degree = 6;
  std::string method = "auto";
  std::string format = "text";
  int starts = 10;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  double box = 0.5;
};

GluingData load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ExitWith{kExitUsage, "cannot open input file: " + path};
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ExitWith{kExitUsage, std::string("invalid JSON: ") + e.what()};
  }
  if (!j.contains("m") || !j.contains("n") || !j.contains("f"))
    throw ExitWith{kExitUsage, "input must contain m, n, and f"};
  int m = j["m"].get<int>();
  int n = j["n"].get<int>();
  GluingPoly f, g, h;
  try {
    f = parse_gluing(j["f"].get<std::string>());
    g = parse_gluing(j.value("g", std::string("0")));
    h = parse_gluing(j.value("h", std::string("0")));
  } catch (const ParseError& e) {
    throw ExitWith{kExitParse, std::string("parse error: ") + e.what()};
  }
  try {
    return validate(m, n, f, g, h);
  } catch (const ValidationError& e) {
    throw ExitWith{kExitValidation, std::string("validation error: ") + e.what()};
  }
}

DeformationResult compute_equations(const GluingData& d, const Options& opt) {
  bool use_laufer;
  if (opt.method == "laufer") {
    if (!d.laufer) throw ExitWith{kExitValidation, "not a Laufer curve"};
    use_laufer = true;
  } else if (opt.method == "general") {
    use_laufer = false;
  } else {
    use_laufer = d.laufer;
  }
  if (use_laufer) return deformation_equations_laufer(d);
  return deformation_equations_general(d, opt.degree);
}

json result_to_json(const DeformationResult& r) {
  json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["method"] =
      r.method == DeformationResult::Method::Laufer ? "laufer" : "general";
  if (r.degree_bound)
    j["degree"] = *r.degree_bound;
  else
    j["degree"] = "exact";
  json k = json::array();
  for (const auto& p : r.equations) k.push_back(p.to_string());
  j["k"] = k;
  j["k0"] = r.k0.to_string();
  return j;
}

void print_equations_text(std::ostream& out, const DeformationResult& r) {
  for (size_t i = 0; i < r.equations.size(); ++i)
    out << "k" << i + 1 << " = " << r.equations[i].to_string() << "\n";
  out << "k0 = " << r.k0.to_string() << "\n";
}

std::string fmt_double(double x) {
  std::ostringstream s;
  s.precision(12);
  s << x;
  return s.str();
}

int cmd_check(const GluingData& d, const Options& opt) {
  if (opt.format == "json") {
    json j;
    j["m"] = d.m;
    j["n"] = d.n;
    j["valid"] = true;
    j["laufer"] = d.laufer;
    j["cy"] = cy_check(d);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "m = " << d.m << "\n"
              << "n = " << d.n << "\n"
              << "valid = true\n"
              << "laufer = " << (d.laufer ? "true" : "false") << "\n"
              << "cy = " << (cy_check(d) ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_equations(const GluingData& d, const Options& opt) {
  DeformationResult r = compute_equations(d, opt);
  if (opt.format == "json")
    std::cout << result_to_json(r).dump(2) << "\n";
  else
    print_equations_text(std::cout, r);
  return kExitOk;
}

int cmd_superpotential(const GluingData& d, const Options& opt) {
  if (!cy_check(d))
    throw ExitWith{kExitNotCY,
                   "superpotential requires the Calabi-Yau case m - n = -2"};
  DeformationResult r = compute_equations(d, opt);
  IntegrabilityReport integ = check_integrability(r);
  if (!integ.integrable)
    throw ExitWith{kExitIntegrability,
                   "integrability failure at (i,j) = (" +
                       std::to_string(integ.i) + "," + std::to_string(integ.j) +
                       "), difference " + integ.witness->to_string()};
  Superpotential w = integrate_potential(r);
  if (opt.format == "json") {
    json j = result_to_json(r);
    j["W"] = w.w.to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    print_equations_text(std::cout, r);
    std::cout << "W = " << w.w.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_family(const GluingData& d, const Options& opt) {
  if (!d.laufer)
    throw ExitWith{kExitValidation, "not a Laufer curve"};
  FamilyCharts charts = family_charts(d);
  if (opt.format == "json") {
    json j;
    j["m"] = d.m;
    j["n"] = d.n;
    j["family"] = {{"y1", charts.y1.to_string()},
                   {"y2", charts.y2.to_string()},
                   {"z1", charts.z1.to_string()},
                   {"z2", charts.z2.to_string()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "y1 = " << charts.y1.to_string() << "\n"
              << "y2 = " << charts.y2.to_string() << "\n"
              << "z1 = " << charts.z1.to_string() << "\n"
              << "z2 = " << charts.z2.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_critical(const GluingData& d, const Options& opt) {
  DeformationResult r = compute_equations(d, opt);
  std::vector<CriticalPoint> points =
      newton_multistart(r, opt.starts, opt.box, opt.tol, 200, opt.seed);
  if (opt.format == "json") {
    json j = result_to_json(r);
    json arr = json::array();
    for (const auto& p : points) {
      json pj;
      pj["point"] = p.point;
      pj["gradient_norm"] = p.gradient_norm;
      pj["hessian_min_singular_value"] = p.hessian_min_singular_value;
      pj["iterations"] = p.iterations;
      pj["converged"] = p.converged;
      pj["singular_jacobian"] = p.singular_jacobian;
      arr.push_back(pj);
    }
    j["critical_points"] = arr;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& p : points) {
      std::cout << "point = (";
      for (size_t i = 0; i < p.point.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << fmt_double(p.point[i]);
      }
      std::cout << "), |k| = " << fmt_double(p.gradient_norm)
                << ", converged = " << (p.converged ? "true" : "false")
                << ", iterations = " << p.iterations
                << ", hess_min_sv = " << fmt_double(p.hessian_min_singular_value)
                << (p.singular_jacobian ? ", singular" : "") << "\n";
    }
  }
  return kExitOk;
}

int cmd_lemma(const GluingData& d, const Options& opt) {
  LemmaReport report;
  try {
    report = coeff_symmetry_lemma_check(d.f, d.m);
  } catch (const StructureError& e) {
    throw ExitWith{kExitValidation, std::string("lemma: ") + e.what()};
  }
  if (opt.format == "json") {
    json j;
    j["holds"] = report.holds;
    j["triples_checked"] = report.triples_checked;
    if (!report.holds) {
      j["i"] = report.i;
      j["j"] = report.j;
      j["k"] = report.k;
      j["witness"] = report.witness->to_string();
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (report.holds)
      std::cout << "lemma = pass (" << report.triples_checked << " triples)\n";
    else
      std::cout << "lemma = fail at (i,j,k) = (" << report.i << "," << report.j
                << "," << report.k << "), difference "
                << report.witness->to_string() << "\n";
  }
  return report.holds ? kExitOk : kExitIntegrability;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"versal deformation equations of rational curves in threefolds"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "input JSON file")->required();
    sub->add_option("--degree", opt.degree, "truncation degree (general method)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--method", opt.method, "auto|laufer|general")
        ->check(CLI::IsMember({"auto", "laufer", "general"}));
    sub->add_option("--format", opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* check = app.add_subcommand("check", "validate gluing data");
  CLI::App* equations =
      app.add_subcommand("equations", "versal deformation equations");
  CLI::App* superpotential =
      app.add_subcommand("superpotential", "equations plus superpotential W");
  CLI::App* family = app.add_subcommand("family", "universal family charts");
  CLI::App* critical =
      app.add_subcommand("critical", "Newton search for critical points");
  CLI::App* lemma =
      app.add_subcommand("lemma", "coefficient-symmetry check on f");
  for (CLI::App* sub :
       {check, equations, superpotential, family, critical, lemma})
    add_common(sub);
  critical->add_option("--starts", opt.starts, "number of Newton starts");
  critical->add_option("--seed", opt.seed, "RNG seed");
  critical->add_option("--tol", opt.tol, "convergence tolerance");
  critical->add_option("--box", opt.box, "start sampling box half-width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    GluingData d = load_input(opt.input);
    if (check->parsed()) return cmd_check(d, opt);
    if (equations->parsed()) return cmd_equations(d, opt);
    if (superpotential->parsed()) return cmd_superpotential(d, opt);
    if (family->parsed()) return cmd_family(d, opt);
    if (critical->parsed()) return cmd_critical(d, opt);
    if (lemma->parsed()) return cmd_lemma(d, opt);
    std::cerr << "error: no command\n";
    return kExitUsage;
  } catch (const ExitWith& e) {
    std::cerr << "error: " << e.reason << "\n";
    return e.code;
  } catch (const NotCalabiYauError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotCY;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
