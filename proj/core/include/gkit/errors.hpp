#pragma once

#include <stdexcept>
#include <string>

namespace gkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph-core
struct MalformedGraph6 : Error { using Error::Error; };
struct MalformedInput : Error { using Error::Error; };
struct NotIndependent : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// complex / homology
struct VoidComplex : Error { using Error::Error; };
struct NotPure : Error { using Error::Error; };
struct NotAFace : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// decision procedures
struct WrongAlpha : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };

// enumeration
struct InconsistentSpec : Error { using Error::Error; };

} // namespace gkit
