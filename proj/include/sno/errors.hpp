#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sno {

// Query position outside the structure's valid range.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// select_b(j) asked for an occurrence that does not exist.
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A query whose precondition on the stored data does not hold
// (e.g. Y(x) on a grid with repeated x-coordinates).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed or rule-violating input. `line` is 0 when the error is not
// tied to a particular input line.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string rule, std::string detail, std::size_t line = 0)
        : std::runtime_error(format(rule, detail, line)),
          rule_(std::move(rule)),
          line_(line) {}

    const std::string& rule() const noexcept { return rule_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(const std::string& rule, const std::string& detail,
                              std::size_t line) {
        std::string msg;
        if (line != 0) msg += "line " + std::to_string(line) + ": ";
        msg += rule;
        if (!detail.empty()) msg += ": " + detail;
        return msg;
    }

    std::string rule_;
    std::size_t line_;
};

// Corrupt or incompatible serialized data.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sno
