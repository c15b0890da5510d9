#ifndef DLAPPROX_ERRORS_HPP
#define DLAPPROX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dla {

// Input did not conform to the textual grammar.
struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(std::string msg, int line_, int column_)
        : std::runtime_error(std::move(msg)), line(line_), column(column_) {}
};

// A documented precondition of an operation was violated by the caller.
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured budget (closure size, enumeration count, ...) was exceeded.
// Never a wrong answer: callers either enlarge the cap or accept truncation.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested mode is not supported for the given scheme (e.g. omega-depth
// approximation where only depth-bounded construction exists).
struct UnsupportedModeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dla

#endif
