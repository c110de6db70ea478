#pragma once

#include <stdexcept>
#include <string>

#include "nullcone/format.hpp"

namespace nullcone {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise malformed numeric input.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Configuration values outside their admissible range.
class InvalidConfig : public Error {
public:
    using Error::Error;
};

/// Evaluation left the domain of an operation (division by zero, sqrt of a
/// negative number, ...). `where` names the node or symbol at fault.
class DomainError : public Error {
public:
    DomainError(const std::string& what, std::string where = {})
        : Error(where.empty() ? what : what + " at " + where), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// Expression text could not be parsed.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t offset)
        : Error("syntax error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset), message_(message) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t offset_;
    std::string message_;
};

class UnknownIdentifier : public SyntaxError {
public:
    UnknownIdentifier(const std::string& name, std::size_t offset)
        : SyntaxError("unknown identifier '" + name + "'", offset), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// The frame pairing <perp(gamma), gamma'> vanished, so N and W do not exist.
class SingularFrame : public Error {
public:
    SingularFrame(double t, double pairing)
        : Error("singular frame at t=" + format_double(t) + " (pairing=" + format_double(pairing) + ")"),
          t_(t), pairing_(pairing) {}

    double t() const noexcept { return t_; }
    double pairing() const noexcept { return pairing_; }

private:
    double t_;
    double pairing_;
};

/// A denominator of a closed-form curvature formula vanished.
class DenominatorZero : public DomainError {
public:
    explicit DenominatorZero(const std::string& symbol)
        : DomainError("printed denominator vanishes", symbol), symbol_(symbol) {}

    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

/// The radicand of a closed-form normalizer is not positive.
class NegativeRadicand : public DomainError {
public:
    NegativeRadicand(const std::string& symbol, double radicand)
        : DomainError("normalizer radicand " + format_double(radicand) + " is not positive", symbol),
          symbol_(symbol), radicand_(radicand) {}

    const std::string& symbol() const noexcept { return symbol_; }
    double radicand() const noexcept { return radicand_; }

private:
    std::string symbol_;
    double radicand_;
};

} // namespace nullcone
