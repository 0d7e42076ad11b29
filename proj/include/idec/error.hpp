#pragma once

#include <stdexcept>
#include <string>

namespace idec {

/// Base class for every error raised by the library. Messages are meant to be
/// shown to the user verbatim by the command line tool.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MeshError : public Error {
public:
    using Error::Error;
};

class SolverError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace idec
