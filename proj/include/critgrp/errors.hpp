#pragma once

#include <stdexcept>
#include <string>

namespace critgrp {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAnInteger : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class NotACharacter : public Error {
public:
    using Error::Error;
};

class NotFaithful : public Error {
public:
    using Error::Error;
};

class NotRealValued : public Error {
public:
    using Error::Error;
};

// A cross-check between two independent computations disagreed.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace critgrp
