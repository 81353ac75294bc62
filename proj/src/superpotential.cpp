#include "curvedef/superpotential.hpp"

#include <algorithm>

#include "curvedef/cech.hpp"

namespace curvedef {

namespace {

// v_i = k_{n-1-i} for i = 0..m; equations[t] holds k_{t+1}.
std::vector<ParamPoly> gradient_field(const DeformationResult& eqs) {
  if (!eqs.square())
    throw NotCalabiYauError(
        "system is not square: m - n != -2, no superpotential");
  std::vector<ParamPoly> v;
  for (int i = 0; i <= eqs.m; ++i) v.push_back(eqs.equations[eqs.n - 2 - i]);
  return v;
}

std::vector<ParamPoly> expansion_coeffs(const GluingPoly& r, int m,
                                        int* top_out) {
  if (r.depends_on_y1())
    throw StructureError("lemma input must be free of y1");
  if (r.has_negative_x())
    throw StructureError("lemma input must be holomorphic in x");
  const int arity = m + 1;
  ChartSeries a_section(Var::X, arity);
  for (int i = 0; i <= m; ++i)
    a_section.add_term(i, ParamPoly::variable(arity, i));
  ChartSeries expansion =
      r.substituted(ChartSeries(Var::X, arity), a_section);
  int top = std::max(0, expansion.max_exponent());
  std::vector<ParamPoly> h;
  for (int i = 0; i <= top; ++i) h.push_back(expansion.coeff(i));
  *top_out = top;
  return h;
}

}  // namespace

bool cy_check(int m, int n) { return m - n == -2; }
bool cy_check(const GluingData& d) { return cy_check(d.m, d.n); }

IntegrabilityReport check_integrability(const DeformationResult& eqs) {
  std::vector<ParamPoly> v = gradient_field(eqs);
  for (int i = 0; i <= eqs.m; ++i) {
    for (int j = i + 1; j <= eqs.m; ++j) {
      ParamPoly diff = v[i].derivative(j) - v[j].derivative(i);
      if (!diff.is_zero()) return {false, i, j, diff};
    }
  }
  return {};
}

LemmaReport coeff_symmetry_lemma_check(const GluingPoly& r, int m) {
  int top = 0;
  std::vector<ParamPoly> h = expansion_coeffs(r, m, &top);
  LemmaReport report;
  for (int i = 0; i <= top; ++i) {
    for (int k = 0; k <= top; ++k) {
      for (int j = 0; j <= m; ++j) {
        const int jj = k + j - i;
        if (jj < 0 || jj > m) continue;
        ++report.triples_checked;
        ParamPoly diff = h[i].derivative(j) - h[k].derivative(jj);
        if (!diff.is_zero()) return {false, i, j, k, diff,
                                     report.triples_checked};
      }
    }
  }
  return report;
}

LemmaReport coeff_symmetry_lemma_check(const GluingPoly& r, int m,
                                       const std::vector<Triple>& triples) {
  int top = 0;
  std::vector<ParamPoly> h = expansion_coeffs(r, m, &top);
  auto h_at = [&](int i) {
    return (i >= 0 && i <= top) ? h[i] : ParamPoly(m + 1);
  };
  LemmaReport report;
  for (const auto& t : triples) {
    if (t.j < 0 || t.j > m)
      throw StructureError("lemma index j out of range");
    const int jj = t.k + t.j - t.i;
    if (jj < 0 || jj > m)
      throw StructureError("lemma index k+j-i out of range");
    if (t.i < 0 || t.k < 0) throw StructureError("lemma index out of range");
    ++report.triples_checked;
    ParamPoly diff = h_at(t.i).derivative(t.j) - h_at(t.k).derivative(jj);
    if (!diff.is_zero())
      return {false, t.i, t.j, t.k, diff, report.triples_checked};
  }
  return report;
}

Superpotential integrate_potential(const DeformationResult& eqs) {
  std::vector<ParamPoly> v = gradient_field(eqs);
  const int arity = eqs.arity();
  int top_degree = 0;
  for (const auto& p : v) top_degree = std::max(top_degree, p.total_degree());

  ParamPoly w(arity);
  for (int d = 0; d <= top_degree; ++d) {
    ParamPoly euler(arity);
    for (int i = 0; i < arity; ++i)
      euler = euler + ParamPoly::variable(arity, i) * v[i].homogeneous_part(d);
    w = w + euler * Rat(1, d + 1);
  }

  for (int i = 0; i < arity; ++i) {
    if (w.derivative(i) != v[i])
      throw ConsistencyError(
          "potential reconstruction failed the exact gradient re-check");
  }
  return {w, eqs.n, eqs.m};
}

}  // namespace curvedef
