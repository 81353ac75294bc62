#include "curvedef/cech.hpp"

namespace curvedef {

namespace {

ZeroCochain add(const ZeroCochain& a, const ZeroCochain& b) {
  return {{a.phi0.first + b.phi0.first, a.phi0.second + b.phi0.second},
          {a.phi1.first + b.phi1.first, a.phi1.second + b.phi1.second},
          a.degree_bound};
}

ZeroCochain sub(const ZeroCochain& a, const ZeroCochain& b) {
  return {{a.phi0.first - b.phi0.first, a.phi0.second - b.phi0.second},
          {a.phi1.first - b.phi1.first, a.phi1.second - b.phi1.second},
          a.degree_bound};
}

ZeroCochain truncate(const ZeroCochain& a) {
  const int D = a.degree_bound;
  if (D < 0) return a;
  return {{a.phi0.first.truncated(D), a.phi0.second.truncated(D)},
          {a.phi1.first.truncated(D), a.phi1.second.truncated(D)},
          D};
}

}  // namespace

ZeroCochain zero_cochain(const GluingData& d, int degree_bound) {
  ChartSeries zx(Var::X, d.arity()), zw(Var::W, d.arity());
  return {{zx, zx}, {zw, zw}, degree_bound};
}

OneCochain one_cochain(const GluingData& d, int degree_bound) {
  ChartSeries zw(Var::W, d.arity());
  return {zw, zw, degree_bound};
}

ZeroCochain universal_section(const GluingData& d, int degree_bound) {
  auto [phi0, phi1] = section_of_H0(d);
  return {phi0, phi1, degree_bound};
}

OneCochain coboundary(const ZeroCochain& phi, const GluingData& d) {
  SectionPair t = apply_transition(phi.phi0, d.transition());
  return {phi.phi1.first - t.first, phi.phi1.second - t.second,
          phi.degree_bound};
}

OneCochain project_H(const OneCochain& psi, int n) {
  ChartSeries kept(Var::W, psi.psi1.arity());
  for (const auto& [e, c] : psi.psi1.terms())
    if (e <= -1 && e >= -(n - 1)) kept.add_term(e, c);
  return {kept, ChartSeries(Var::W, psi.psi2.arity()), psi.degree_bound};
}

OneCochain project_B(const OneCochain& psi, int n) {
  ChartSeries kept(Var::W, psi.psi1.arity());
  for (const auto& [e, c] : psi.psi1.terms())
    if (e <= -n || e >= 0) kept.add_term(e, c);
  return {kept, psi.psi2, psi.degree_bound};
}

ZeroCochain lift_E0(const OneCochain& psi, const GluingData& d) {
  const int n = d.n, m = d.m, arity = d.arity();
  ChartSeries p01(Var::X, arity), p02(Var::X, arity);
  ChartSeries p11(Var::W, arity), p12(Var::W, arity);
  for (const auto& [i, b] : psi.psi1.terms()) {
    if (i >= 0) {
      p11.add_term(i, b);
    } else if (i <= -n) {
      p01.add_term(-n - i, -b);
    } else {
      throw StructureError(
          "not a coboundary: first component has exponent in the H^1 window");
    }
  }
  for (const auto& [i, c] : psi.psi2.terms()) {
    if (i >= 0)
      p12.add_term(i, c);
    else
      p02.add_term(m - i, -c);
  }
  return {{p01, p02}, {p11, p12}, psi.degree_bound};
}

OneCochain map_K(const ZeroCochain& phi, const GluingData& d) {
  const int D = phi.degree_bound;
  const int arity = d.arity();
  ChartSeries h_val = d.h.substituted(phi.phi0.first, phi.phi0.second, D);
  ChartSeries wmap = h_val;
  wmap.add_term(-1, ParamPoly::constant(arity, 1));
  ChartSeries c1 = phi.phi1.first.composed_at(wmap, D) -
                   phi.phi0.first.shifted(d.n) -
                   d.f.substituted(phi.phi0.first, phi.phi0.second, D);
  ChartSeries c2 = phi.phi1.second.composed_at(wmap, D) -
                   phi.phi0.second.shifted(-d.m) -
                   d.g.substituted(phi.phi0.first, phi.phi0.second, D);
  if (D >= 0) {
    c1 = c1.truncated(D);
    c2 = c2.truncated(D);
  }
  return {c1.converted(), c2.converted(), D};
}

ZeroCochain map_L(const ZeroCochain& phi, const GluingData& d) {
  ZeroCochain correction =
      sub(lift_E0(project_B(map_K(phi, d), d.n), d), lift_E0(coboundary(phi, d), d));
  return truncate(add(phi, correction));
}

ZeroCochain invert_L(const ZeroCochain& target, const GluingData& d) {
  const int D = target.degree_bound;
  if (D < 1) throw StructureError("degree bound must be >= 1");
  ZeroCochain phi = target;
  for (int iter = 0; iter <= D; ++iter) {
    ZeroCochain correction = sub(lift_E0(coboundary(phi, d), d),
                                 lift_E0(project_B(map_K(phi, d), d.n), d));
    ZeroCochain next = truncate(add(target, correction));
    if (next == phi) return phi;
    phi = next;
  }
  throw ConsistencyError(
      "L-inversion did not stabilize within the degree bound");
}

DeformationResult deformation_equations_general(const GluingData& d,
                                                int degree_bound) {
  ZeroCochain phi = invert_L(universal_section(d, degree_bound), d);
  OneCochain rep = project_H(map_K(phi, d), d.n);
  DeformationResult result(d.m, d.n);
  result.method = DeformationResult::Method::General;
  result.degree_bound = degree_bound;
  for (int i = 1; i <= d.n - 1; ++i)
    result.equations.push_back(rep.psi1.coeff(-i));
  return result;
}

}  // namespace curvedef
