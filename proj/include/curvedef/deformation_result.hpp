#ifndef CURVEDEF_DEFORMATION_RESULT_HPP
#define CURVEDEF_DEFORMATION_RESULT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "curvedef/param_poly.hpp"

namespace curvedef {

/// The versal deformation equations k_1..k_{n-1} (their common zero set is
/// the versal deformation space), together with the auxiliary k_0 and the
/// family tail k_j for j >= n.
struct DeformationResult {
  enum class Method { Laufer, General };

  int m = 0;
  int n = 2;
  std::vector<ParamPoly> equations;          // k_1 .. k_{n-1}
  ParamPoly k0;                              // never part of the equations
  std::vector<std::pair<int, ParamPoly>> higher;  // (j, k_j) for j >= n
  Method method = Method::General;
  std::optional<int> degree_bound;  // nullopt means exact

  DeformationResult(int m_, int n_)
      : m(m_), n(n_), k0(m_ + 1) {}

  int arity() const { return m + 1; }
  /// The system is square exactly in the Calabi-Yau case m - n = -2.
  bool square() const { return n - 1 == m + 1; }
};

}  // namespace curvedef

#endif
