#ifndef CURVEDEF_EXPRPARSE_HPP
#define CURVEDEF_EXPRPARSE_HPP

#include <stdexcept>
#include <string>

#include "curvedef/gluing_poly.hpp"
#include "curvedef/param_poly.hpp"

namespace curvedef {

/// Syntax or lexical error; position is a 1-based character offset.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position(position) {}
  int position;
};

/// Parses a gluing expression in the variables x, y1, y2.
/// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := atom ('^' integer)?; atom := var | rational | '(' expr ')'.
/// Unary minus is allowed at expression head. Negative exponents only on x.
GluingPoly parse_gluing(const std::string& src);

/// Same grammar over the parameter variables a0..a{arity-1}.
ParamPoly parse_param(const std::string& src, int arity);

}  // namespace curvedef

#endif
