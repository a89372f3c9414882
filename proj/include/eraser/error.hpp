#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eraser {

// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An entity or relation string is empty after normalization.
class InvalidEntityError : public Error {
public:
    using Error::Error;
};

// The requested private sampling target is zero or no eligible triple remains.
class DegenerateRatioError : public Error {
public:
    using Error::Error;
};

// A triple field contains one of the reserved linearization markers.
class UnencodableTripleError : public Error {
public:
    using Error::Error;
};

// Linearized text does not follow the block grammar.
class MalformedLinearizationError : public Error {
public:
    MalformedLinearizationError(const std::string& what, std::size_t offset)
        : Error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A ratio over an empty denominator set was requested.
class UndefinedRatioError : public Error {
public:
    using Error::Error;
};

// A retention rate or penalty parameter is outside its valid range.
class InvalidRateError : public Error {
public:
    using Error::Error;
};

// A sentence alignment does not cover every sentence of the document.
class AlignmentGapError : public Error {
public:
    using Error::Error;
};

// A remote rewrite/extract/generate call failed (transport error, timeout, or
// non-200 status).
class RemoteFailureError : public Error {
public:
    using Error::Error;
};

// A remote service replied with a body the harness cannot interpret.
class MalformedResponseError : public Error {
public:
    using Error::Error;
};

// A corpus or run file violates its schema. Carries file and line when known.
class SchemaViolationError : public Error {
public:
    using Error::Error;
    SchemaViolationError(const std::string& file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what) {}
};

// A record references an id that does not exist in the corpus.
class DanglingReferenceError : public Error {
public:
    using Error::Error;
};

// No QA pair satisfies the eligibility filter.
class UndefinedAccuracyError : public Error {
public:
    using Error::Error;
};

// A run directory is missing files required for reporting.
class IncompleteRunError : public Error {
public:
    using Error::Error;
};

}  // namespace eraser
