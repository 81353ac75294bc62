#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvedef/exprparse.hpp"
#include "curvedef/laufer.hpp"
#include "support.hpp"

using namespace curvedef;
using namespace curvedef::testing;

namespace {
ParamPoly pp(const std::string& s, int arity = 2) {
  return parse_param(s, arity);
}
}  // namespace

TEST_CASE("taylor_coeffs examples") {
  // Example 1 at p=1: f(x, a0 + a1 x) = (a0+a1x)^2 + x^2 (a0+a1x)^3.
  std::vector<ParamPoly> f = taylor_coeffs(example1(1), 5);
  CHECK(f[0] == pp("a0^2"));
  CHECK(f[1] == pp("2*a0*a1"));
  CHECK(f[2] == pp("a1^2 + a0^3"));
  CHECK(f[3] == pp("3*a0^2*a1"));
  CHECK(f[4] == pp("3*a0*a1^2"));
  CHECK(f[5] == pp("a1^3"));

  GluingData zero = validate(1, 3, {}, {}, {});
  for (const auto& c : taylor_coeffs(zero, 4)) CHECK(c.is_zero());

  std::vector<ParamPoly> g =
      taylor_coeffs(validate(1, 3, parse_gluing("x*y2^2"), {}, {}), 3);
  CHECK(g[0].is_zero());
  CHECK(g[1] == pp("a0^2"));
  CHECK(g[2] == pp("2*a0*a1"));
  CHECK(g[3] == pp("a1^2"));

  GluingData not_laufer = validate(1, 3, parse_gluing("y1*y2"), {}, {});
  CHECK_THROWS_AS(taylor_coeffs(not_laufer, 3), NotLauferError);
}

TEST_CASE("deformation_equations_laufer examples") {
  DeformationResult r = deformation_equations_laufer(example1(1));
  REQUIRE(r.equations.size() == 2);
  CHECK(r.equations[0] == pp("-2*a0*a1"));
  CHECK(r.equations[1] == pp("-(a1^2 + a0^3)"));
  CHECK(r.k0 == pp("-a0^2"));
  CHECK(r.method == DeformationResult::Method::Laufer);
  CHECK_FALSE(r.degree_bound.has_value());

  DeformationResult smooth =
      deformation_equations_laufer(validate(1, 3, {}, {}, {}));
  CHECK(smooth.equations[0].is_zero());
  CHECK(smooth.equations[1].is_zero());
  CHECK(smooth.higher.empty());

  DeformationResult shifted = deformation_equations_laufer(
      validate(1, 3, parse_gluing("x*y2^2"), {}, {}));
  CHECK(shifted.equations[0] == pp("-a0^2"));
  CHECK(shifted.equations[1] == pp("-2*a0*a1"));
  REQUIRE(shifted.higher.size() == 1);
  CHECK(shifted.higher[0].first == 3);
  CHECK(shifted.higher[0].second == pp("-a1^2"));
}

TEST_CASE("minimum degree of the equations") {
  Rng rng(61);
  for (int i = 0; i < 40; ++i) {
    DeformationResult r =
        deformation_equations_laufer(rand_laufer_data(rng, false));
    CHECK(static_cast<int>(r.equations.size()) == r.n - 1);
    for (const auto& k : r.equations)
      if (!k.is_zero()) CHECK(k.min_degree() >= 2);
  }
}

TEST_CASE("closed_form_Linv examples") {
  // f = y2^2: the expansion stops below n, so the tail h vanishes.
  GluingData dsq = validate(1, 3, parse_gluing("y2^2"), {}, {});
  ZeroCochain phi = closed_form_Linv(dsq);
  CHECK(phi.phi0.first.is_zero());
  CHECK(phi.phi1.first.coeff(0) == pp("a0^2"));

  GluingData triv = validate(1, 3, {}, {}, {});
  ZeroCochain s = closed_form_Linv(triv);
  CHECK(s.phi0.first.is_zero());
  CHECK(s.phi1.first.is_zero());
  CHECK(s.phi0.second == universal_section(triv, s.degree_bound).phi0.second);

  // Example 1 at p=1: h = f_3 + f_4 x + f_5 x^2.
  ZeroCochain e1 = closed_form_Linv(example1(1));
  CHECK(e1.phi0.first.coeff(0) == pp("-3*a0^2*a1"));
  CHECK(e1.phi0.first.coeff(1) == pp("-3*a0*a1^2"));
  CHECK(e1.phi0.first.coeff(2) == pp("-a1^3"));
}

TEST_CASE("map_L of the closed form is s(a) on random Laufer data") {
  Rng rng(67);
  for (int i = 0; i < 30; ++i) {
    GluingData d = rand_laufer_data(rng, false);
    // closed_form_Linv verifies map_L(phi) == s(a) internally and throws
    // on mismatch.
    CHECK_NOTHROW(closed_form_Linv(d));
  }
}

TEST_CASE("family_charts examples") {
  FamilyCharts triv = family_charts(validate(1, 3, {}, {}, {}));
  CHECK(triv.y1.is_zero());
  CHECK(triv.z1.is_zero());

  FamilyCharts shifted =
      family_charts(validate(1, 3, parse_gluing("x*y2^2"), {}, {}));
  // Signs fixed by re-substitution: y1 = -h = -f_3, z1 = f_0.
  CHECK(shifted.y1.coeff(0) == pp("-a1^2"));
  CHECK(shifted.z1.is_zero());

  FamilyCharts e1 = family_charts(example1(1));
  CHECK(e1.y1.coeff(0) == pp("-3*a0^2*a1"));
  CHECK(e1.y1.coeff(1) == pp("-3*a0*a1^2"));
  CHECK(e1.y1.coeff(2) == pp("-a1^3"));
  CHECK(e1.z1 == pp("a0^2"));

  CHECK_THROWS_AS(family_charts(validate(1, 3, parse_gluing("y1*y2"), {}, {})),
                  NotLauferError);
}

TEST_CASE("family charts satisfy the gluing relations on the versal locus") {
  // f = x*y2^2, m=1, n=3: the versal space contains the line a0 = 0.
  // Substituting a0 = 0 exactly, the charts must satisfy
  // z1 = x^n y1 + f(x, y2) and z2 = x^-m y2 identically in x.
  GluingData d = validate(1, 3, parse_gluing("x*y2^2"), {}, {});
  FamilyCharts charts = family_charts(d);

  auto on_line = [](const ParamPoly& p) {
    // a0 -> 0 by dropping all terms with positive a0-exponent.
    ParamPoly out(p.arity());
    for (const auto& [e, c] : p.terms())
      if (e[0] == 0) out.add_term(e, c);
    return out;
  };
  auto restrict_series = [&](const ChartSeries& s) {
    ChartSeries out(s.var(), s.arity());
    for (const auto& [e, c] : s.terms()) out.add_term(e, on_line(c));
    return out;
  };

  ChartSeries y1 = restrict_series(charts.y1);
  ChartSeries y2 = restrict_series(charts.y2);

  // z1 chart: x^3 y1 + f(x, y1, y2).
  ChartSeries z1 = y1.shifted(3) + d.f.substituted(y1, y2);
  ChartSeries z1_expected(Var::X, 2);
  z1_expected.add_term(0, on_line(charts.z1));
  CHECK(z1 == z1_expected);

  // z2 chart: x^-1 y2.
  CHECK(y2.shifted(-1).converted() == restrict_series(charts.z2));
}

TEST_CASE("homogeneity for monomial f") {
  Rng rng(71);
  for (int i = 0; i < 30; ++i) {
    int dgr = rand_int(rng, 2, 5);
    int e = rand_int(rng, 0, 3);
    GluingPoly f;
    f.add_term({e, 0, static_cast<unsigned>(dgr)}, rand_rat(rng));
    int m = rand_int(rng, 0, 3);
    DeformationResult r =
        deformation_equations_laufer(validate(m, m + 2, f, {}, {}));
    for (const auto& k : r.equations) {
      if (k.is_zero()) continue;
      CHECK(k.min_degree() == dgr);
      CHECK(k.total_degree() == dgr);
    }
  }
}
