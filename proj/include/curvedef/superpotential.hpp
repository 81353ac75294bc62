#ifndef CURVEDEF_SUPERPOTENTIAL_HPP
#define CURVEDEF_SUPERPOTENTIAL_HPP

#include <optional>
#include <vector>

#include "curvedef/deformation_result.hpp"
#include "curvedef/gluing.hpp"

namespace curvedef {

struct NotCalabiYauError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// True iff the threefold has trivial canonical bundle, i.e. m - n = -2.
/// Exactly then the deformation system is square.
bool cy_check(const GluingData& d);
bool cy_check(int m, int n);

/// Result of the Jacobian symmetry check for the vector field
/// v_i = k_{n-1-i}. On failure carries the offending index pair and the
/// nonzero difference d v_i / d a_j - d v_j / d a_i.
struct IntegrabilityReport {
  bool integrable = true;
  int i = -1;
  int j = -1;
  std::optional<ParamPoly> witness;
};

/// Throws NotCalabiYauError unless the system is square.
IntegrabilityReport check_integrability(const DeformationResult& eqs);

struct LemmaReport {
  bool holds = true;
  int i = -1, j = -1, k = -1;
  std::optional<ParamPoly> witness;
  int triples_checked = 0;
};

struct Triple {
  int i, j, k;
};

/// Coefficient-symmetry identity for h_i = coefficients of
/// r(x, sum_j a_j x^j): d h_i / d a_j = d h_k / d a_{k+j-i} whenever
/// 0 <= j <= m and 0 <= k+j-i <= m. r must be free of y1 and holomorphic
/// in x. Checks every valid triple up to the expansion's top index.
LemmaReport coeff_symmetry_lemma_check(const GluingPoly& r, int m);

/// Same, for an explicit triple list; throws StructureError when an index
/// is out of range.
LemmaReport coeff_symmetry_lemma_check(const GluingPoly& r, int m,
                                       const std::vector<Triple>& triples);

struct Superpotential {
  ParamPoly w;
  int n, m;
};

/// Reconstructs W with dW/da_i = k_{n-1-i} and W(0) = 0 by the
/// degree-graded Euler operator: the degree-(d+1) part of W is
/// (sum_i a_i v_i^{(d)}) / (d+1). The gradient identity is re-verified by
/// exact differentiation; a mismatch raises NotCalabiYauError (non-square)
/// or ConsistencyError (non-integrable field).
Superpotential integrate_potential(const DeformationResult& eqs);

}  // namespace curvedef

#endif
