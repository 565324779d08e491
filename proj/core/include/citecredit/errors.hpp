#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citecredit {

// Input could not be decoded at all (bad CSV quoting, bad JSON, wrong
// column count, non-numeric field). Carries the 1-based line number of
// the offending record.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Input decoded but violates a domain invariant (negative citations,
// empty author list, duplicate id, rank override out of range, empty
// dataset, snapshot before a publication year).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what)
        : std::runtime_error(what) {}
};

// The researcher could not be given an author rank for a publication:
// either no author matches the profile or more than one does.
class ResolutionError : public ValidationError {
public:
    explicit ResolutionError(const std::string& what)
        : ValidationError(what) {}
};

}  // namespace citecredit
