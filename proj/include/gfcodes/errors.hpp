#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfcodes {

// Malformed textual input (word strings, code files).
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}

    // Offending character index for words, 1-based line number for files.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Operands of incompatible lengths, or a result that would not fit a Word.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameter outside the documented range.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Work would exceed the memory/time budget of an exhaustive sweep or search.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Input outside an operation's domain (e.g. no 0^{m+1} window for the
// partition index, a word that is not a vertex of the graph).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace gfcodes
