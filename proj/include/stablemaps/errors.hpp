#pragma once

#include <stdexcept>
#include <string>

namespace stablemaps {

/// Base class for all errors raised by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed text input (state files, plan files, tuple literals).
struct ParseError : Error {
    using Error::Error;
};

/// A MapState violates a structural invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// A transition was applied at a site that fails its guard.
struct GuardError : Error {
    using Error::Error;
};

/// A site names a surface or circuit that does not resolve.
struct ReferenceError : Error {
    using Error::Error;
};

/// An operation was called outside its stated domain.
struct DomainError : Error {
    using Error::Error;
};

} // namespace stablemaps
