#ifndef CURVEDEF_GLUING_POLY_HPP
#define CURVEDEF_GLUING_POLY_HPP

#include <map>
#include <string>
#include <tuple>

#include "curvedef/chart_series.hpp"
#include "curvedef/rat.hpp"

namespace curvedef {

/// A polynomial in (x, y1, y2) with rational coefficients; x-exponents may
/// be negative (sections holomorphic only on the chart overlap). Houses the
/// gluing corrections f, g, h.
class GluingPoly {
 public:
  struct Key {
    int ex;
    unsigned ey1;
    unsigned ey2;
    unsigned y_degree() const { return ey1 + ey2; }
    bool operator==(const Key&) const = default;
  };

  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      return std::tuple(a.y_degree(), a.ex, a.ey1) <
             std::tuple(b.y_degree(), b.ex, b.ey1);
    }
  };

  using TermMap = std::map<Key, Rat, KeyLess>;

  GluingPoly() = default;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Key& k) const;
  void add_term(const Key& k, const Rat& c);

  GluingPoly operator+(const GluingPoly& o) const;
  GluingPoly operator-(const GluingPoly& o) const;
  GluingPoly operator-() const;
  GluingPoly operator*(const GluingPoly& o) const;
  GluingPoly pow(int k) const;
  bool operator==(const GluingPoly& o) const = default;

  bool depends_on_y1() const;
  bool has_negative_x() const;
  unsigned min_y_degree() const;  // 0 for the zero polynomial
  unsigned max_y_degree() const;

  /// Exact expansion of this polynomial at y1 = y1_val, y2 = y2_val,
  /// both ChartSeries in x; result is a ChartSeries in x. trunc_degree < 0
  /// means no truncation of the parameter degree.
  ChartSeries substituted(const ChartSeries& y1_val, const ChartSeries& y2_val,
                          int trunc_degree = -1) const;

  /// Canonical text, e.g. "y2^2 + x^2*y2^3", "x^-1*y1*y2 - 1/2*y2^2", "0".
  std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace curvedef

#endif
