/*
  poly_parser.hpp

  Text grammar for polynomial input:
    poly  := ('+'|'-')? term (('+'|'-') term)*
    term  := coeff ('*'? xpart)? ('*'? ypart)? | xpart ('*'? ypart)? | ypart
    xpart := 'x' ('^' nat)?     ypart := 'y' ('^' nat)?
    coeff := digit+
  Whitespace-insensitive; integer coefficients only; variables other than x, y
  are rejected. Degrees are capped by REALROOTS_MAX_DEGREE (default 64).
*/
#pragma once

#include <string>

#include "realroots/bivariate.hpp"

namespace realroots::cli {

struct ParsedPolynomial {
    BivariatePolynomial poly;
    bool uses_x = false;
    bool uses_y = false;
};

ParsedPolynomial parse_polynomial(const std::string& text);

// The x-univariate view; ParseError if the text used y.
IntPolynomial parse_univariate(const std::string& text);

BivariatePolynomial parse_bivariate(const std::string& text);

// "p/q" or an integer literal.
Rational parse_rational_arg(const std::string& text);

unsigned max_degree_cap();

}  // namespace realroots::cli
