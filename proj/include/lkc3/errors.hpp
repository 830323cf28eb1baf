#pragma once

#include <stdexcept>
#include <string>

namespace lkc3 {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotAUnitError : public Error {
public:
    explicit NotAUnitError(const std::string& msg) : Error(msg) {}
};

class ZeroSpecializationError : public Error {
public:
    explicit ZeroSpecializationError(const std::string& msg) : Error(msg) {}
};

class ZeroQError : public Error {
public:
    explicit ZeroQError(const std::string& msg) : Error(msg) {}
};

class DimMismatchError : public Error {
public:
    explicit DimMismatchError(const std::string& msg) : Error(msg) {}
};

class ModeMismatchError : public Error {
public:
    explicit ModeMismatchError(const std::string& msg) : Error(msg) {}
};

class UnsupportedDimError : public Error {
public:
    explicit UnsupportedDimError(const std::string& msg) : Error(msg) {}
};

// Word grammar errors carry the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

class IndexError : public Error {
public:
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

class TOnlyForN3Error : public Error {
public:
    explicit TOnlyForN3Error(const std::string& msg) : Error(msg) {}
};

class SpecInvalidError : public Error {
public:
    explicit SpecInvalidError(const std::string& msg) : Error(msg) {}
};

class ExcludedPointError : public Error {
public:
    explicit ExcludedPointError(const std::string& msg) : Error(msg) {}
};

class UnsupportedSetError : public Error {
public:
    explicit UnsupportedSetError(const std::string& msg) : Error(msg) {}
};

class UnknownCaseError : public Error {
public:
    explicit UnknownCaseError(const std::string& msg) : Error(msg) {}
};

class CaseNotApplicableError : public Error {
public:
    explicit CaseNotApplicableError(const std::string& msg) : Error(msg) {}
};

class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& msg) : Error(msg) {}
};

} // namespace lkc3
