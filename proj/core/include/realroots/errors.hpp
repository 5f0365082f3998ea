/*
  errors.hpp

  Exception hierarchy for the realroots library. Every error carries a stable
  machine-readable tag used by the CLI.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace realroots {

class Error : public std::runtime_error {
public:
    Error(std::string tag, const std::string& what)
        : std::runtime_error(what), tag_(std::move(tag)) {}
    const std::string& tag() const { return tag_; }

private:
    std::string tag_;
};

// Input outside an operation's mathematical domain (zero polynomial, constant
// where degree >= 1 is required, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("DomainError", what) {}
};

// A stated precondition was violated (degree order, square-freeness, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error("PreconditionError", what) {}
};

// A sign sequence that cannot arise from a valid Sturm-Habicht evaluation.
class StructureError : public Error {
public:
    explicit StructureError(const std::string& what) : Error("StructureError", what) {}
};

// An interval endpoint is a root of the queried polynomial.
class EndpointRootError : public Error {
public:
    explicit EndpointRootError(const std::string& what) : Error("EndpointRootError", what) {}
};

// Extension-field operands anchored to different base numbers.
class BaseMismatchError : public Error {
public:
    explicit BaseMismatchError(const std::string& what) : Error("BaseMismatchError", what) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what) : Error("DivisionByZero", what) {}
};

// The two curves of a bivariate system share a component.
class CommonComponentError : public Error {
public:
    explicit CommonComponentError(const std::string& what) : Error("CommonComponentError", what) {}
};

class GenericPositionError : public Error {
public:
    explicit GenericPositionError(const std::string& what) : Error("GenericPositionError", what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error("ParseError", what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Broken internal invariant; indicates a bug, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error("InternalError", what) {}
};

}  // namespace realroots
