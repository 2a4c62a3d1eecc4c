#pragma once

#include <stdexcept>
#include <string>

namespace sdaas {

// Bad value passed by a caller (out-of-range speed, invalid position, ...).
class ArgumentError : public std::runtime_error {
public:
    explicit ArgumentError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally inconsistent data (dangling edge endpoint, malformed CSV row, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation requires state that has not been established (e.g. segment without wind).
class StateError : public std::runtime_error {
public:
    explicit StateError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sdaas
