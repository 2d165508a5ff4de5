#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace surfdyn {

// Thrown by parse_spec on syntax errors, unknown fields, bad types and
// duplicate ids. line/column are 1-based; column is 0 when only the line is
// known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column = 0)
        : std::runtime_error(msg), line(line), column(column) {}

    int line = 0;
    int column = 0;
};

// Thrown by operations that require a valid spec (decompose, stability
// verdicts, ...) when validation fails.
class InvalidSpecError : public std::runtime_error {
public:
    InvalidSpecError(const std::string& msg, std::vector<std::string> rule_codes)
        : std::runtime_error(msg), rule_codes(std::move(rule_codes)) {}

    std::vector<std::string> rule_codes;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace surfdyn
