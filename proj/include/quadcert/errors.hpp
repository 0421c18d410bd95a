#pragma once

#include <stdexcept>
#include <string>

namespace quadcert {

// Base for all errors thrown by the library. Verification outcomes that the
// caller is expected to inspect (defects, failed junctions, ...) are returned
// as values, not thrown.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class RingMismatchError : public Error {
public:
    explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

class NameClashError : public Error {
public:
    explicit NameClashError(const std::string& msg) : Error(msg) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// A stated precondition of an operation does not hold (failed membership,
// arity mismatch, non-monic input, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

class CancelledError : public Error {
public:
    CancelledError() : Error("operation cancelled") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line(line),
          column(column) {}
    int line;
    int column;
};

}  // namespace quadcert
