#pragma once

#include <stdexcept>
#include <string>

namespace dc1lab {

/// Base class for every failure raised by the library. The CLI maps all of
/// these to exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point lies outside the phase space of the system.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A system description or config violates its invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Caller supplied an unknown vertex, an unmappable point, malformed text, ...
class InputError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A symbol sequence is not admissible for the shift of finite type.
class SftError : public Error {
public:
    using Error::Error;
};

/// The content-addressed store does not match its own manifest.
class IntegrityError : public Error {
public:
    using Error::Error;
};

}  // namespace dc1lab
