#pragma once
#include <stdexcept>
#include <string>

namespace trapgraph {

// Input diagram violates a structural invariant (labels, corner order, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Text input cannot be decoded as a .trap diagram.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a configured exhaustive-search bound.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace trapgraph
