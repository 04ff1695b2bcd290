#ifndef ANGLEPOLY_ERROR_HPP
#define ANGLEPOLY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace anglepoly {

/// Malformed textual input (necklace lists, templates, parameter lists).
class ParseError : public std::invalid_argument
{
    public:
        explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called outside its domain: wrong parity, empty polytope,
/// enumeration cap exceeded, and so on.
class DomainError : public std::domain_error
{
    public:
        explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A numeric procedure could not reach its stated tolerance.
class NumericError : public std::runtime_error
{
    public:
        explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}   // namespace anglepoly

#endif
