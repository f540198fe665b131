#pragma once

#include <stdexcept>
#include <string>

namespace structnet {

// Base class for all errors raised by the library. The CLI maps these to
// exit code 1; everything else escapes as a plain std::exception.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class MissingValueError : public Error {
public:
    using Error::Error;
};

class DuplicateFeatureNameError : public Error {
public:
    using Error::Error;
};

class TargetNotFoundError : public Error {
public:
    using Error::Error;
};

class TooFewSamplesError : public Error {
public:
    using Error::Error;
};

class InvalidDistributionError : public Error {
public:
    using Error::Error;
};

class LengthMismatchError : public Error {
public:
    using Error::Error;
};

class VertexCountMismatchError : public Error {
public:
    using Error::Error;
};

class NotPositiveDefiniteError : public Error {
public:
    using Error::Error;
};

class ClassTooSmallError : public Error {
public:
    using Error::Error;
};

class EmptySubsetError : public Error {
public:
    using Error::Error;
};

class InvalidKListError : public Error {
public:
    using Error::Error;
};

} // namespace structnet
