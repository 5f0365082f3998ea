/*
  output_format.hpp

  Exact, machine-readable rendering of library results. Text format emits one
  record per line; JSON encodes every rational as a canonical "p/q" string.
*/
#pragma once

#include <string>
#include <vector>

#include "realroots/bivariate.hpp"
#include "realroots/bounds.hpp"

namespace realroots::cli {

enum class Format { text, json };

Format parse_format(const std::string& name);  // "text" | "json"

std::string format_roots(const std::vector<IsolatedRoot>& roots, Format f);
std::string format_sign(Sign s, Format f);
std::string format_ordering(Ordering o, Format f);
std::string format_solutions(const std::vector<SystemSolution>& sols, Format f);

struct BoundsReport {
    Rational cauchy;
    Rational mahler_upper;
    bool has_separation = false;
    Rational separation;
    std::vector<std::pair<unsigned, Rational>> davenport_mahler;  // (k, bound)
};

BoundsReport compute_bounds_report(const IntPolynomial& f);
std::string format_bounds(const BoundsReport& r, Format f);

}  // namespace realroots::cli
