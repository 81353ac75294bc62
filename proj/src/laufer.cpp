#include "curvedef/laufer.hpp"

#include <algorithm>

namespace curvedef {

namespace {

void require_laufer(const GluingData& d) {
  if (!d.laufer) throw NotLauferError("not a Laufer curve");
}

ChartSeries a_section_x(const GluingData& d) {
  ChartSeries s(Var::X, d.arity());
  for (int i = 0; i <= d.m; ++i)
    s.add_term(i, ParamPoly::variable(d.arity(), i));
  return s;
}

}  // namespace

int taylor_max_index(const GluingData& d) {
  require_laufer(d);
  int max_index = 0;
  for (const auto& [k, c] : d.f.terms())
    max_index = std::max<int>(max_index, k.ex + d.m * k.ey2);
  return max_index;
}

std::vector<ParamPoly> taylor_coeffs(const GluingData& d, int max_index) {
  require_laufer(d);
  const int arity = d.arity();
  ChartSeries expansion =
      d.f.substituted(ChartSeries(Var::X, arity), a_section_x(d));
  std::vector<ParamPoly> coeffs;
  coeffs.reserve(max_index + 1);
  for (int i = 0; i <= max_index; ++i) coeffs.push_back(expansion.coeff(i));
  return coeffs;
}

DeformationResult deformation_equations_laufer(const GluingData& d) {
  require_laufer(d);
  const int top = std::max(taylor_max_index(d), d.n - 1);
  std::vector<ParamPoly> f = taylor_coeffs(d, top);
  DeformationResult result(d.m, d.n);
  result.method = DeformationResult::Method::Laufer;
  result.degree_bound = std::nullopt;
  result.k0 = -f[0];
  for (int i = 1; i <= d.n - 1; ++i) result.equations.push_back(-f[i]);
  for (int j = d.n; j <= top; ++j)
    if (!f[j].is_zero()) result.higher.emplace_back(j, -f[j]);
  return result;
}

ZeroCochain closed_form_Linv(const GluingData& d) {
  require_laufer(d);
  const int arity = d.arity();
  const int top = taylor_max_index(d);
  std::vector<ParamPoly> f = taylor_coeffs(d, top);

  ChartSeries h_tail(Var::X, arity);
  for (int i = d.n; i <= top; ++i) h_tail.add_term(i - d.n, f[i]);

  ChartSeries p01 = -h_tail;
  ChartSeries p02 = a_section_x(d);
  ChartSeries p11(Var::W, arity);
  p11.add_term(0, f[0]);
  ChartSeries p12(Var::W, arity);
  for (int i = 0; i <= d.m; ++i)
    p12.add_term(d.m - i, ParamPoly::variable(arity, i));

  // Everything in sight is polynomial, so a degree bound past every
  // intermediate makes the truncations no-ops and map_L exact.
  int max_deg = std::max(1, h_tail.max_param_degree());
  int bound = (max_deg + 1) * static_cast<int>(std::max(1u, d.f.max_y_degree()));
  ZeroCochain phi{{p01, p02}, {p11, p12}, bound};
  ZeroCochain check = map_L(phi, d);
  ZeroCochain expected = universal_section(d, bound);
  if (!(check == expected))
    throw ConsistencyError("closed-form L^-1 failed the map_L verification");
  return phi;
}

FamilyCharts family_charts(const GluingData& d) {
  require_laufer(d);
  const int arity = d.arity();
  const int top = taylor_max_index(d);
  std::vector<ParamPoly> f = taylor_coeffs(d, top);

  ChartSeries y1(Var::X, arity);
  for (int j = d.n; j <= top; ++j) y1.add_term(j - d.n, -f[j]);

  ChartSeries z2(Var::W, arity);
  for (int i = 0; i <= d.m; ++i)
    z2.add_term(d.m - i, ParamPoly::variable(arity, i));

  return {y1, a_section_x(d), f[0], z2};
}

}  // namespace curvedef
