#pragma once

#include <stdexcept>
#include <string>

namespace raincloud {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A statistical operation was invoked on an empty sample.
class EmptySampleError : public Error {
public:
    EmptySampleError() : Error("empty sample") {}
    explicit EmptySampleError(const std::string& what) : Error(what) {}
};

/// An argument is outside its documented domain.
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

/// An operation needs more data points than the sample provides.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// A band is too thin to hold the requested marks.
class BandTooThinError : public Error {
public:
    using Error::Error;
};

/// Two images passed to a comparison have different dimensions.
class ShapeMismatchError : public Error {
public:
    using Error::Error;
};

/// A configuration document failed to parse or validate.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// File input/output failed.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace raincloud
