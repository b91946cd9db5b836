#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eudata {

// Base class for all errors raised by the library. `kind()` is a stable
// machine-readable tag; the CLI maps it to the report status field.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& msg)
        : Error("ParseError", msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class InvalidSubstitution : public Error {
public:
    explicit InvalidSubstitution(const std::string& msg) : Error("InvalidSubstitution", msg) {}
};

class SizeError : public Error {
public:
    explicit SizeError(const std::string& msg) : Error("SizeError", msg) {}
};

// S-pair budget exceeded; signals intractable input rather than hanging.
class ResourceLimit : public Error {
public:
    explicit ResourceLimit(const std::string& msg) : Error("ResourceLimit", msg) {}
};

class NotZeroDimensional : public Error {
public:
    explicit NotZeroDimensional(const std::string& msg) : Error("NotZeroDimensional", msg) {}
};

// Randomized genericity checks disagreed after all retries.
class GenericityFailure : public Error {
public:
    explicit GenericityFailure(const std::string& msg) : Error("GenericityFailure", msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch", msg) {}
};

class NonIsolatedSingularity : public Error {
public:
    explicit NonIsolatedSingularity(const std::string& msg)
        : Error("NonIsolatedSingularity", msg) {}
};

class UnsupportedSingularLocus : public Error {
public:
    explicit UnsupportedSingularLocus(const std::string& msg)
        : Error("UnsupportedSingularLocus", msg) {}
};

// Two independent computations of the same invariant disagreed.
class ConsistencyFailure : public Error {
public:
    explicit ConsistencyFailure(const std::string& msg) : Error("ConsistencyFailure", msg) {}
};

class FixtureError : public Error {
public:
    explicit FixtureError(const std::string& msg) : Error("FixtureError", msg) {}
};

class CommonComponent : public Error {
public:
    explicit CommonComponent(const std::string& msg) : Error("CommonComponent", msg) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error("InvalidArgument", msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error("IoError", msg) {}
};

}  // namespace eudata
