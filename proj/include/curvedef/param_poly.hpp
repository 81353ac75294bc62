#ifndef CURVEDEF_PARAM_POLY_HPP
#define CURVEDEF_PARAM_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "curvedef/rat.hpp"

namespace curvedef {

/// Sparse multivariate polynomial in the deformation parameters
/// a_0..a_{arity-1} over exact rationals. Terms are kept in the canonical
/// order used for printing: ascending total degree, and within a degree
/// descending powers of a_0, a_1, ... in turn.
class ParamPoly {
 public:
  using Exponents = std::vector<unsigned>;

  struct TermLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };

  using TermMap = std::map<Exponents, Rat, TermLess>;

  explicit ParamPoly(int arity);
  static ParamPoly constant(int arity, Rat c);
  static ParamPoly variable(int arity, int index);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a monomial (zero if absent).
  Rat coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rat& c);

  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator-() const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly operator*(const Rat& c) const;
  ParamPoly pow(int k) const;

  bool operator==(const ParamPoly& o) const;
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  /// Exact partial derivative with respect to a_index.
  ParamPoly derivative(int index) const;

  /// Drops every term of total degree > max_degree.
  ParamPoly truncated(int max_degree) const;

  /// Part of exact total degree d.
  ParamPoly homogeneous_part(int d) const;

  int total_degree() const;  // -1 for the zero polynomial
  int min_degree() const;    // -1 for the zero polynomial

  double eval(const std::vector<double>& a) const;
  Rat eval_exact(const std::vector<Rat>& a) const;

  /// Canonical text form, e.g. "-2*a0*a1", "-1*a1^2 - 1*a0^3", "0".
  std::string to_string() const;

 private:
  void check_arity(const ParamPoly& o) const;

  int arity_;
  TermMap terms_;
};

inline ParamPoly operator*(const Rat& c, const ParamPoly& p) { return p * c; }

}  // namespace curvedef

#endif
