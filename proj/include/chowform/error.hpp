#pragma once

#include <stdexcept>
#include <string>

namespace chowform {

/// Domain error: a precondition or mathematical hypothesis was violated.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document or polynomial text (distinct from validation failures).
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

} // namespace chowform
