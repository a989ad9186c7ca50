#pragma once

#include <stdexcept>
#include <string>

namespace fdi {

/// Input violated a documented invariant (bad config value, malformed record, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A file could not be read or its syntax is broken.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem-level failure (missing file, unwritable directory).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fdi
