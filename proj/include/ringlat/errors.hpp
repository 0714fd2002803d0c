#ifndef RINGLAT_ERRORS_HPP
#define RINGLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ringlat {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DescriptorMismatch : Error {
    explicit DescriptorMismatch(const std::string& what)
        : Error("field descriptor mismatch: " + what) {}
};

struct UnsupportedTower : Error {
    explicit UnsupportedTower(const std::string& what)
        : Error("unsupported field tower: " + what) {}
};

struct InfiniteField : Error {
    explicit InfiniteField(const std::string& what)
        : Error("operation requires a finite field: " + what) {}
};

struct BadDescriptor : Error {
    explicit BadDescriptor(const std::string& what)
        : Error("bad field descriptor: " + what) {}
};

struct ParentMismatch : Error {
    ParentMismatch() : Error("elements belong to different algebras") {}
};

struct BadAlgebra : Error {
    explicit BadAlgebra(const std::string& what)
        : Error("invalid algebra: " + what) {}
};

struct NotAnIdeal : Error {
    explicit NotAnIdeal(const std::string& what)
        : Error("not an ideal: " + what) {}
};

struct ScanCapExceeded : Error {
    explicit ScanCapExceeded(const std::string& what)
        : Error("element scan cap exceeded: " + what) {}
};

struct NodeCapExceeded : Error {
    explicit NodeCapExceeded(const std::string& what)
        : Error("lattice node cap exceeded: " + what) {}
};

struct UnsupportedDecomposition : Error {
    explicit UnsupportedDecomposition(const std::string& what)
        : Error("maximal-ideal decomposition not supported here: " + what) {}
};

struct NotAMinimalStep : Error {
    explicit NotAMinimalStep(const std::string& what)
        : Error("chain step is not a minimal extension: " + what) {}
};

struct TooManyAtoms : Error {
    explicit TooManyAtoms(const std::string& what)
        : Error("too many atoms for subset enumeration: " + what) {}
};

struct InvalidPrecondition : Error {
    explicit InvalidPrecondition(const std::string& what)
        : Error("precondition violated: " + what) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what)
        : Error("precondition failed: " + what) {}
};

struct UnknownExample : Error {
    explicit UnknownExample(const std::string& name)
        : Error("unknown catalog example: " + name) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what)
        : Error("parse error: " + what) {}
};

} // namespace ringlat

#endif
