#ifndef VSPREAD_ERRORS_HPP
#define VSPREAD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vspread {

/// A documented precondition of an operation does not hold for its input
/// (mixed ambients, non-spread monomial, ideal outside the required class, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed monomial or spread-vector text. `position` is a 0-based offset
/// into the parsed string and `token` the offending piece of input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position, std::string token)
        : std::invalid_argument(what), position_(position), token_(std::move(token)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t position_;
    std::string token_;
};

/// Two independent random coordinate changes kept disagreeing on the
/// initial ideal.
class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace vspread

#endif
