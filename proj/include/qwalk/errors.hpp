#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Adjacency-list syntax or consistency problem; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
    int line;
};

// A graph that does not match the requested scenario's structure.
class ScenarioMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qwalk
