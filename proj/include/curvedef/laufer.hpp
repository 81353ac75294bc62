#ifndef CURVEDEF_LAUFER_HPP
#define CURVEDEF_LAUFER_HPP

#include "curvedef/cech.hpp"
#include "curvedef/deformation_result.hpp"
#include "curvedef/gluing.hpp"

namespace curvedef {

struct NotLauferError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coefficients f_i(a) of x^i in f(x, sum_j a_j x^j), for 0 <= i <=
/// max_index. Exact; the expansion is a polynomial in the a_j.
std::vector<ParamPoly> taylor_coeffs(const GluingData& d, int max_index);

/// Largest x-index that can occur in the expansion of f.
int taylor_max_index(const GluingData& d);

/// The deformation equations k_i = -f_i, 1 <= i <= n-1, plus k_0 = -f_0
/// and the family tail k_j = -f_j for j >= n. Exact.
DeformationResult deformation_equations_laufer(const GluingData& d);

/// The closed-form preimage L^-1(s(a)) =
/// ((-h, sum a_i x^i), (f_0, sum a_i w^{m-i})) with
/// h = sum_{i>=n} f_i(a) x^{i-n}. Verified against map_L on construction.
ZeroCochain closed_form_Linv(const GluingData& d);

/// The universal family over the versal space, one equation per chart
/// coordinate. Signs are fixed so that substituting the U0 chart into the
/// gluing relations reproduces the U1 chart modulo (k_1..k_{n-1}).
struct FamilyCharts {
  ChartSeries y1;  // in x: -sum_{j>=n} f_j(a) x^{j-n}
  ChartSeries y2;  // in x: sum a_i x^i
  ParamPoly z1;    // f_0(a) = -k_0
  ChartSeries z2;  // in w: sum a_i w^{m-i}
};

FamilyCharts family_charts(const GluingData& d);

}  // namespace curvedef

#endif
