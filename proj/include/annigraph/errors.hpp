#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace annigraph {

/// Base class for every error the library reports to callers.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed ring / ideal / module text. `position` is a 0-based offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A configured size cap was exceeded; `partial` carries how far the computation got.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::size_t partial)
        : Error(what), partial_(partial) {}
    std::size_t partial() const noexcept { return partial_; }

private:
    std::size_t partial_;
};

/// No vertex set satisfies the requested domination predicate.
class InfeasibleVariant : public Error {
public:
    InfeasibleVariant() : Error("variant infeasible") {}
};

}  // namespace annigraph
