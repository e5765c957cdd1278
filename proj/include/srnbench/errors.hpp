#pragma once

#include <stdexcept>
#include <string>

namespace srnbench {

/// Thrown when input data violates a documented contract
/// (non-uniform time grid, mismatched recordings, bad config values, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on file-level problems: missing files, malformed rows.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace srnbench
