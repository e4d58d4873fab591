#pragma once

#include <stdexcept>
#include <string>

namespace cobweb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

// Malformed input text (data files, tree imports).
struct ParseError : Error {
    using Error::Error;
};

// Well-formed input that violates a documented invariant.
struct ValidationError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace cobweb
