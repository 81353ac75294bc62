#include "curvedef/gluing.hpp"

namespace curvedef {

namespace {
void check_ideal_square(const GluingPoly& p, const char* name) {
  for (const auto& [k, c] : p.terms()) {
    if (k.y_degree() < 2) {
      GluingPoly mono;
      mono.add_term(k, c);
      throw ValidationError(std::string(name) +
                            " violates the I^2 condition at monomial " +
                            mono.to_string());
    }
  }
}
}  // namespace

GluingData validate(int m, int n, const GluingPoly& f, const GluingPoly& g,
                    const GluingPoly& h) {
  if (m < 0) throw ValidationError("m must be >= 0");
  if (n < 2) throw ValidationError("n must be >= 2");
  check_ideal_square(f, "f");
  check_ideal_square(g, "g");
  check_ideal_square(h, "h");
  GluingData d{m, n, f, g, h, false};
  d.laufer = g.is_zero() && h.is_zero() && !f.depends_on_y1() &&
             !f.has_negative_x();
  return d;
}

std::pair<SectionPair, SectionPair> section_of_H0(const GluingData& d) {
  const int arity = d.arity();
  ChartSeries zero_x(Var::X, arity), zero_w(Var::W, arity);
  ChartSeries s0(Var::X, arity), s1(Var::W, arity);
  for (int i = 0; i <= d.m; ++i) {
    ParamPoly ai = ParamPoly::variable(arity, i);
    s0.add_term(i, ai);
    s1.add_term(d.m - i, ai);
  }
  return {{zero_x, s0}, {zero_w, s1}};
}

SectionPair apply_transition(const SectionPair& phi0,
                             const TransitionMatrix& F) {
  return {phi0.first.shifted(F.n).converted(),
          phi0.second.shifted(-F.m).converted()};
}

}  // namespace curvedef
