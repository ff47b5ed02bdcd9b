#ifndef EXPLORE_ERRORS_HPP_
#define EXPLORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace explore {

/// Index outside the grid.
class BoundsError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A caller broke an operation's precondition (e.g. robot pose on an obstacle).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Two grids that must share dimensions do not.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant of the exploration loop was violated.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed world text. line() and column() are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " at line " + std::to_string(line) +
                             ", column " + std::to_string(column)),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace explore

#endif  // EXPLORE_ERRORS_HPP_
