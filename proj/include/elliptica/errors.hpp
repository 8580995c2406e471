#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elliptica {

/// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

class NonPolynomialQuotient : public Error {
public:
    using Error::Error;
};

class PurityError : public Error {
public:
    using Error::Error;
};

class NonIntegerChi : public Error {
public:
    using Error::Error;
};

class NoExactHomology : public Error {
public:
    using Error::Error;
};

class UnsupportedLeaf : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace elliptica
