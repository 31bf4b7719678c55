#pragma once

#include <stdexcept>
#include <string>

namespace bf {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands come from rings with different variable counts.
class RingMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class NotPrimePower : public Error {
public:
    explicit NotPrimePower(long long q)
        : Error("not a prime power: " + std::to_string(q)) {}
};

// A matrix failed the uI + N normal-form identities.
class NotInForm : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace bf
