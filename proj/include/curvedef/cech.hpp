#ifndef CURVEDEF_CECH_HPP
#define CURVEDEF_CECH_HPP

#include "curvedef/deformation_result.hpp"
#include "curvedef/gluing.hpp"

namespace curvedef {

/// Signals a fixed-point iteration that failed to stabilize, i.e. an I^2
/// violation that escaped validation.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of C^0(V, N): holomorphic section pairs over V0 (in x) and V1
/// (in w), with all coefficients truncated to total a-degree <= degree_bound.
struct ZeroCochain {
  SectionPair phi0;  // in x, nonnegative exponents
  SectionPair phi1;  // in w, nonnegative exponents
  int degree_bound;

  bool operator==(const ZeroCochain& o) const {
    return phi0 == o.phi0 && phi1 == o.phi1;
  }
};

/// Element of C^1(V, N): a section pair on the overlap, written in the V1
/// trivialization (Laurent in w).
struct OneCochain {
  ChartSeries psi1;
  ChartSeries psi2;
  int degree_bound;

  bool operator==(const OneCochain& o) const {
    return psi1 == o.psi1 && psi2 == o.psi2;
  }
};

ZeroCochain zero_cochain(const GluingData& d, int degree_bound);
OneCochain one_cochain(const GluingData& d, int degree_bound);

/// s(a) as a ZeroCochain.
ZeroCochain universal_section(const GluingData& d, int degree_bound);

/// delta(phi) = phi^1(w) - phi^0 F, expressed in w. Linear.
OneCochain coboundary(const ZeroCochain& phi, const GluingData& d);

/// Projection onto the H^1 representatives: keeps first-component
/// coefficients of w^-1..w^-(n-1) and zeroes everything else.
OneCochain project_H(const OneCochain& psi, int n);

/// Complementary projection onto the coboundary subspace: first component
/// keeps exponents <= -n and >= 0, second component kept entirely.
OneCochain project_B(const OneCochain& psi, int n);

/// Right inverse of delta on the coboundary subspace (delta o lift_E0 = id).
/// Throws StructureError if psi has first-component exponents in
/// {-(n-1)..-1}.
ZeroCochain lift_E0(const OneCochain& psi, const GluingData& d);

/// The nonlinear patching obstruction: component j is
/// phi^1_j(x^-1 + h(x, phi^0)) - (transition + correction), converted to w
/// and truncated. K(phi) = 0 iff the graph of phi patches to a curve.
OneCochain map_K(const ZeroCochain& phi, const GluingData& d);

/// L(phi) = phi + E0 B K(phi) - E0 delta(phi).
ZeroCochain map_L(const ZeroCochain& phi, const GluingData& d);

/// Solves L(phi) = target (target = s(a)) by fixed-point iteration; exact
/// modulo a-degree > degree_bound. The correction raises the minimum
/// a-degree each step, so at most degree_bound iterations are needed.
ZeroCochain invert_L(const ZeroCochain& target, const GluingData& d);

/// H K L^-1 (s(a)): the deformation equations of the general path,
/// truncated to total a-degree <= degree_bound.
DeformationResult deformation_equations_general(const GluingData& d,
                                                int degree_bound);

}  // namespace curvedef

#endif
