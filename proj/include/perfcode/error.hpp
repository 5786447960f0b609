#ifndef PERFCODE_ERROR_HPP
#define PERFCODE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace perfcode {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation needed an explicit enumeration that exceeds the
// materialization threshold (see Options::enum_cap_log2).
struct TooLargeError : Error {
    explicit TooLargeError(const std::string& msg) : Error(msg) {}
};

// Malformed input file; carries a 1-based line number when known.
struct ParseError : Error {
    int line = 0;
    ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? msg + " (line " + std::to_string(line_no) + ")" : msg),
          line(line_no) {}
};

// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

} // namespace perfcode

#endif
