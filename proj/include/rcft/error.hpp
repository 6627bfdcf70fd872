#pragma once

#include <stdexcept>
#include <string>

namespace rcft {

enum class Errc {
    precondition,        // caller broke an operation's precondition
    division_by_zero,
    order_limit,         // cyclotomic order above the configured cap
    not_coprime,         // Galois index not a unit
    non_integral_fusion,
    zero_vacuum_row,
    no_match,            // sigma(S) is not a signed row permutation of S
    ambiguous_match,
    galois_closure,
    data_integrity,
    cap_exceeded,
    parse,
};

const char* to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Document syntax error with a 1-based location.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error(Errc::parse, "line " + std::to_string(line) + ", column " +
                                 std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace rcft
