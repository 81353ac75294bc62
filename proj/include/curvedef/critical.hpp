#ifndef CURVEDEF_CRITICAL_HPP
#define CURVEDEF_CRITICAL_HPP

#include <cstdint>
#include <vector>

#include "curvedef/deformation_result.hpp"
#include "curvedef/superpotential.hpp"

namespace curvedef {

/// Float evaluation of the equation vector at a parameter point.
std::vector<double> eval_field(const std::vector<ParamPoly>& eqs,
                               const std::vector<double>& a);

struct FdGradientReport {
  bool pass = true;
  double max_relative_deviation = 0.0;
  std::vector<double> worst_point;
  int worst_index = -1;
};

/// Central finite differences of W against the k_{n-1-i} evaluations at
/// num_points random points with max-norm <= radius. Relative error uses
/// denominator max(1, |k|).
FdGradientReport fd_gradient_check(const Superpotential& w,
                                   const DeformationResult& eqs,
                                   int num_points, double radius, double step,
                                   double tol, std::uint64_t seed);

struct CriticalPoint {
  std::vector<double> point;
  double gradient_norm = 0.0;
  double hessian_min_singular_value = 0.0;
  int iterations = 0;
  bool converged = false;
  bool singular_jacobian = false;
};

/// Newton iteration a <- a - J^+ k(a) with the exact-symbolic Jacobian
/// evaluated in doubles. Near-singular Jacobians switch to a pseudo-inverse
/// step and set the singular flag; escape from the 10x start box is
/// reported as non-convergence.
CriticalPoint newton_solve(const DeformationResult& eqs,
                           const std::vector<double>& start, double tol,
                           int max_iter, double box = 1.0);

/// Independent multi-start sampling in the max-norm box; results sorted by
/// coordinates for deterministic output.
std::vector<CriticalPoint> newton_multistart(const DeformationResult& eqs,
                                             int num_starts, double box,
                                             double tol, int max_iter,
                                             std::uint64_t seed);

}  // namespace curvedef

#endif
