#ifndef ROBUSTPD_ERROR_HPP
#define ROBUSTPD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace robustpd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input value; the message names the offending field.
class ParameterError : public Error {
public:
    ParameterError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}
    [[nodiscard]] const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Malformed edge-list text.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// The graph lacks a structural property the operation needs (connected, block graph, ...).
class StructuralError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// No object with the requested property exists.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// The requested parameter is not defined for this input.
class UndefinedParameterError : public Error {
public:
    using Error::Error;
};

/// A search hit its deadline. `proven_lower` is the best lower bound established before stopping.
class SearchTimeout : public Error {
public:
    SearchTimeout(const std::string& what, int proven_lower)
        : Error(what), proven_lower_(proven_lower) {}
    [[nodiscard]] int proven_lower() const { return proven_lower_; }

private:
    int proven_lower_;
};

} // namespace robustpd

#endif
