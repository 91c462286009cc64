#pragma once

#include <stdexcept>
#include <string>

namespace qdual {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// .dnf input problems
struct SyntaxError : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NotAntichain : Error { using Error::Error; };

// contract violations on values
struct DomainError : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct ArityTooLarge : Error { using Error::Error; };
struct EvenArity : Error { using Error::Error; };
struct ConstantFunction : Error { using Error::Error; };

// simulator limits and misuse
struct TooManyQubits : Error { using Error::Error; };
struct QubitIndexError : Error { using Error::Error; };
struct DegenerateState : Error { using Error::Error; };
struct WidthTooSmall : Error { using Error::Error; };

} // namespace qdual
