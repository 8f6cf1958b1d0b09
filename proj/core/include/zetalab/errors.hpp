#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zetalab {

enum class ErrorKind {
    Capacity,
    Domain,
    Pole,
    EtaPole,
    ProductSingularity,
    Config,
    GridTooCoarse,
    EvaluatorAccuracy,
    NoSignChange,
    SingularStep,
    Parse,
    Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base class for every computational failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ProductSingularityError : public Error {
public:
    ProductSingularityError(std::size_t k, const std::string& what)
        : Error(ErrorKind::ProductSingularity, what), index_(k) {}

    /// 1-based index of the prime whose factor vanished.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace zetalab
