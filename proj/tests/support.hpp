#ifndef CURVEDEF_TESTS_SUPPORT_HPP
#define CURVEDEF_TESTS_SUPPORT_HPP

#include <random>

#include "curvedef/cech.hpp"
#include "curvedef/exprparse.hpp"
#include "curvedef/gluing.hpp"

namespace curvedef::testing {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rat rand_rat(Rng& rng) {
  int num = rand_int(rng, -6, 6);
  if (num == 0) num = 1;
  return Rat(num, rand_int(rng, 1, 4));
}

inline ParamPoly rand_param_poly(Rng& rng, int arity, int max_degree,
                                 int max_terms) {
  ParamPoly p(arity);
  const int terms = rand_int(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    ParamPoly::Exponents e(arity, 0);
    int budget = rand_int(rng, 0, max_degree);
    for (int b = 0; b < budget; ++b) e[rand_int(rng, 0, arity - 1)] += 1;
    p.add_term(e, rand_rat(rng));
  }
  return p;
}

inline ChartSeries rand_chart_series(Rng& rng, Var var, int arity, int min_exp,
                                     int max_exp, int max_degree) {
  ChartSeries s(var, arity);
  const int terms = rand_int(rng, 0, 5);
  for (int t = 0; t < terms; ++t)
    s.add_term(rand_int(rng, min_exp, max_exp),
               rand_param_poly(rng, arity, max_degree, 3));
  return s;
}

/// Random gluing polynomial subject to the I^2 condition.
inline GluingPoly rand_gluing_poly(Rng& rng, int max_terms, int min_x,
                                   int max_x, bool allow_y1) {
  GluingPoly p;
  const int terms = rand_int(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    int ydeg = rand_int(rng, 2, 4);
    unsigned ey1 = allow_y1 ? static_cast<unsigned>(rand_int(rng, 0, ydeg)) : 0;
    p.add_term({rand_int(rng, min_x, max_x), ey1,
                static_cast<unsigned>(ydeg) - ey1},
               rand_rat(rng));
  }
  return p;
}

/// Random Laufer f: monomials x^e y2^d with d >= 2 and e + d <= 5.
inline GluingPoly rand_laufer_f(Rng& rng, int max_terms = 4) {
  GluingPoly p;
  const int terms = rand_int(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    int d = rand_int(rng, 2, 5);
    int e = rand_int(rng, 0, 5 - d);
    p.add_term({e, 0, static_cast<unsigned>(d)}, rand_rat(rng));
  }
  return p;
}

inline GluingData rand_laufer_data(Rng& rng, bool cy_only) {
  int m = rand_int(rng, 0, 4);
  int n = cy_only ? m + 2 : m + 2 + rand_int(rng, 0, 1);
  return validate(m, n, rand_laufer_f(rng), {}, {});
}

/// Example 1 with inner exponent p: m=1, n=3, f = y2^2 + x^2 y2^{2p+1}.
inline GluingData example1(int p = 1) {
  GluingPoly f;
  f.add_term({0, 0, 2}, 1);
  f.add_term({2, 0, static_cast<unsigned>(2 * p + 1)}, 1);
  return validate(1, 3, f, {}, {});
}

/// Random valid ZeroCochain (holomorphic components, coefficients of
/// a-degree >= 1).
inline ZeroCochain rand_zero_cochain(Rng& rng, const GluingData& d, int D) {
  const int arity = d.arity();
  auto piece = [&](Var v) {
    ChartSeries s(v, arity);
    const int terms = rand_int(rng, 0, 4);
    for (int t = 0; t < terms; ++t) {
      ParamPoly c = rand_param_poly(rng, arity, D, 2);
      // Strip the constant part: cochain entries vanish at a = 0.
      c = c - ParamPoly::constant(arity, c.coeff(ParamPoly::Exponents(arity, 0)));
      s.add_term(rand_int(rng, 0, 4), c);
    }
    return s;
  };
  ZeroCochain phi{{piece(Var::X), piece(Var::X)},
                  {piece(Var::W), piece(Var::W)},
                  D};
  return phi;
}

inline OneCochain rand_one_cochain(Rng& rng, const GluingData& d, int D) {
  const int arity = d.arity();
  return {rand_chart_series(rng, Var::W, arity, -6, 4, D),
          rand_chart_series(rng, Var::W, arity, -6, 4, D), D};
}

}  // namespace curvedef::testing

#endif
