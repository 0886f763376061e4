#pragma once

#include <stdexcept>
#include <string>

namespace rollercoaster {

// Base for every error raised by the library. Input problems (bad codes,
// bad words, missing files) derive from InputError so the CLI can map them
// to a usage exit code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
  using Error::Error;
};

class ParseError : public InputError {
public:
  using InputError::InputError;
};

// Gauss code whose crossings do not pair one odd label with one even label.
class FramingError : public InputError {
public:
  using InputError::InputError;
};

class NotRealizable : public InputError {
public:
  using InputError::InputError;
};

// Operation requires a one-component braid closure.
class NotAKnot : public InputError {
public:
  using InputError::InputError;
};

// Operation requires a positive braid word / a bigon-free word / etc.
class PreconditionError : public InputError {
public:
  using InputError::InputError;
};

class CapExceeded : public InputError {
public:
  using InputError::InputError;
};

}  // namespace rollercoaster
