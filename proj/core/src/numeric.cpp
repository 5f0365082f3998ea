#include "realroots/numeric.hpp"

#include <ostream>

namespace realroots {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace realroots
