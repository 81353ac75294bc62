#ifndef CURVEDEF_CHART_SERIES_HPP
#define CURVEDEF_CHART_SERIES_HPP

#include <map>
#include <string>

#include "curvedef/param_poly.hpp"

namespace curvedef {

/// Which chart variable a series lives in. On the overlap w = x^{-1}.
enum class Var { X, W };

inline const char* var_name(Var v) { return v == Var::X ? "x" : "w"; }

/// Sparse Laurent polynomial in a single chart variable with ParamPoly
/// coefficients. Negative exponents are allowed (sections on the overlap).
class ChartSeries {
 public:
  ChartSeries(Var var, int arity);

  Var var() const { return var_; }
  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, ParamPoly>& terms() const { return terms_; }

  ParamPoly coeff(int exponent) const;
  void add_term(int exponent, const ParamPoly& c);

  ChartSeries operator+(const ChartSeries& o) const;
  ChartSeries operator-(const ChartSeries& o) const;
  ChartSeries operator-() const;
  ChartSeries operator*(const ChartSeries& o) const;
  ChartSeries operator*(const ParamPoly& c) const;
  ChartSeries pow(int k, int trunc_degree = -1) const;

  bool operator==(const ChartSeries& o) const;
  bool operator!=(const ChartSeries& o) const { return !(*this == o); }

  /// Multiplies by var^k (shifts every exponent by k).
  ChartSeries shifted(int k) const;

  /// Relabels exponent i in x as exponent -i in w (and vice versa).
  /// Exact involution coming from w = x^{-1}.
  ChartSeries converted() const;

  /// Drops coefficient terms of total a-degree > max_degree.
  ChartSeries truncated(int max_degree) const;

  /// Keeps only the coefficient parts of exact a-degree d.
  ChartSeries homogeneous_part(int d) const;

  bool holomorphic() const;  // no negative exponents
  int min_exponent() const;  // 0 for the zero series
  int max_exponent() const;

  int max_param_degree() const;  // largest a-degree over all coefficients

  /// Substitutes this series (in w, nonnegative exponents only) at
  /// w = wmap, where wmap is a Laurent series in x. trunc_degree < 0
  /// means no truncation.
  ChartSeries composed_at(const ChartSeries& wmap, int trunc_degree = -1) const;

  std::string to_string() const;

 private:
  void check_compat(const ChartSeries& o) const;

  Var var_;
  int arity_;
  std::map<int, ParamPoly> terms_;
};

}  // namespace curvedef

#endif
