#pragma once

#include <stdexcept>
#include <string>

namespace glarb {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two values from different group descriptors were combined.
struct MismatchError : Error {
    using Error::Error;
};

// Malformed text input. `line` is 1-based, 0 when unknown.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what : what),
          line(line_) {}
};

// A documented operation precondition does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

// A search or evaluation exceeded its explicit budget/capacity.
struct ResourceError : Error {
    using Error::Error;
};

// Enumeration produced more results than the caller-imposed cap.
struct CapacityError : ResourceError {
    using ResourceError::ResourceError;
};

// Staged pipeline input violates an intermediate invariant.
struct StageError : Error {
    std::string stage;
    StageError(const std::string& stage_, const std::string& what)
        : Error("stage '" + stage_ + "': " + what), stage(stage_) {}
};

// A state the underlying theory rules out; indicates a bug upstream.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace glarb
