#pragma once

#include <stdexcept>
#include <string>

namespace qhx {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownVertex : public Error {
public:
    using Error::Error;
};

class UnknownEdge : public Error {
public:
    using Error::Error;
};

class SelfLoopContraction : public Error {
public:
    using Error::Error;
};

class DomainMismatch : public Error {
public:
    using Error::Error;
};

class NotUndirected : public Error {
public:
    using Error::Error;
};

class ApexCollision : public Error {
public:
    using Error::Error;
};

class BadParams : public Error {
public:
    using Error::Error;
};

/// A structural constraint of the declared kind is violated, e.g. two
/// parallel edges under the `digraph` header.
class KindViolation : public Error {
public:
    using Error::Error;
};

class LabelClash : public Error {
public:
    using Error::Error;
};

class NotABijection : public Error {
public:
    using Error::Error;
};

class InvalidMorphism : public Error {
public:
    using Error::Error;
};

class HasOrientedCycle : public Error {
public:
    using Error::Error;
};

class Disconnected : public Error {
public:
    using Error::Error;
};

class NotAContraction : public Error {
public:
    using Error::Error;
};

class BoundsTooLarge : public Error {
public:
    using Error::Error;
};

/// Embedded-cycle enumeration exceeded the documented cap.
class CycleLimitExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace qhx
