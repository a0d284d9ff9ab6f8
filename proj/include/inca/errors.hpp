#pragma once

#include <stdexcept>
#include <string>

namespace inca {

// A structurally broken diagram was passed where a valid one is required.
class invalid_diagram : public std::invalid_argument {
public:
    explicit invalid_diagram(const std::string& what) : std::invalid_argument(what) {}
};

// A move was applied at a site that does not satisfy its precondition.
class not_applicable : public std::logic_error {
public:
    explicit not_applicable(const std::string& what) : std::logic_error(what) {}
};

// A configured hard limit (state count, graph size, symmetry budget) was hit.
class resource_limit : public std::runtime_error {
public:
    explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

// An iterative numerical method failed to converge.
class numerical_failure : public std::runtime_error {
public:
    explicit numerical_failure(const std::string& what) : std::runtime_error(what) {}
};

// Text input rejected by a parser; carries a 1-based position.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                             ": " + message),
          line(line),
          column(column) {}

    int line;
    int column;
};

}  // namespace inca
