#ifndef CURVEDEF_GLUING_HPP
#define CURVEDEF_GLUING_HPP

#include <string>
#include <utility>

#include "curvedef/chart_series.hpp"
#include "curvedef/gluing_poly.hpp"

namespace curvedef {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Normal bundle O(m) (+) O(-n); the transition matrix is diag(x^n, x^-m).
struct TransitionMatrix {
  int m;
  int n;
};

/// Two-chart gluing data (m, n, f, g, h) describing the threefold near the
/// curve: z1 = x^n y1 + f, z2 = x^-m y2 + g, w = x^-1 + h, with f, g, h
/// polynomial sections of I^2 written in U0 coordinates.
struct GluingData {
  int m = 0;
  int n = 2;
  GluingPoly f, g, h;
  /// g = h = 0, f independent of y1 and holomorphic on all of U0.
  bool laufer = false;

  int arity() const { return m + 1; }
  TransitionMatrix transition() const { return {m, n}; }
};

/// Checks m >= 0, n >= 2 and the I^2 condition (every monomial of f, g, h
/// has y-degree >= 2); sets the laufer flag. Throws ValidationError naming
/// the offending monomial.
GluingData validate(int m, int n, const GluingPoly& f, const GluingPoly& g,
                    const GluingPoly& h);

/// A C^0 section pair in one chart: (phi_1, phi_2).
using SectionPair = std::pair<ChartSeries, ChartSeries>;

/// The universal H^0 section s(a) = ((0, sum a_i x^i), (0, sum a_i w^{m-i})).
/// Returned as the (V0, V1) pair of section pairs.
std::pair<SectionPair, SectionPair> section_of_H0(const GluingData& d);

/// Row-vector-times-matrix transition: (x^n phi_1, x^-m phi_2), rewritten
/// in the w coordinate.
SectionPair apply_transition(const SectionPair& phi0,
                             const TransitionMatrix& F);

}  // namespace curvedef

#endif
