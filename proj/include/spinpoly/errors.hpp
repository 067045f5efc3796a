#pragma once

#include <stdexcept>
#include <string>

namespace spinpoly {

/// Enumeration guard violated (dimension or column count too large).
class SizeError : public std::invalid_argument {
public:
    explicit SizeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Index or dimension mismatch between otherwise valid values.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A value invariant does not hold (bad probability, bad affine sum, entry out of range).
class InvariantError : public std::invalid_argument {
public:
    explicit InvariantError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input text or document.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A search terminated without producing a witness.
class SearchError : public std::runtime_error {
public:
    explicit SearchError(const std::string& what) : std::runtime_error(what) {}
};

/// A computed result failed its own exact re-verification. Always a bug, never input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace spinpoly
