/*
  extended_point.hpp

  A rational evaluation point extended with -infinity / +infinity.
*/
#pragma once

#include "realroots/numeric.hpp"

namespace realroots {

class ExtendedPoint {
public:
    enum class Kind { neg_infinity, finite, pos_infinity };

    static ExtendedPoint neg_infinity() { return ExtendedPoint(Kind::neg_infinity, Rational(0)); }
    static ExtendedPoint pos_infinity() { return ExtendedPoint(Kind::pos_infinity, Rational(0)); }
    ExtendedPoint(Rational v) : kind_(Kind::finite), value_(std::move(v)) {}  // NOLINT

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    const Rational& value() const {
        if (!is_finite()) throw DomainError("value of infinite point");
        return value_;
    }

    bool operator==(const ExtendedPoint& o) const {
        if (kind_ != o.kind_) return false;
        return kind_ != Kind::finite || value_ == o.value_;
    }
    bool operator<(const ExtendedPoint& o) const {
        if (kind_ == o.kind_) return kind_ == Kind::finite && value_ < o.value_;
        if (kind_ == Kind::neg_infinity) return true;
        if (o.kind_ == Kind::pos_infinity) return true;
        return false;
    }

private:
    ExtendedPoint(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
    Kind kind_;
    Rational value_;
};

}  // namespace realroots
