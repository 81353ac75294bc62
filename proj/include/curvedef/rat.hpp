#ifndef CURVEDEF_RAT_HPP
#define CURVEDEF_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace curvedef {

// Exact rational coefficient field. cpp_rational keeps gcd-reduced
// numerator/denominator with denominator > 0, which is exactly the
// canonical form we need.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rat& r) { return r.str(); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace curvedef

#endif
