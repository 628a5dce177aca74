#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scx {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands have incompatible dimensions (vector/matrix/point mixes).
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// A value was outside its domain (zero denominator, bad index, ...).
struct ValueError : Error {
    using Error::Error;
};

/// Vertex set handed to a simplex constructor is not geometrically independent.
struct DependentVerticesError : Error {
    std::size_t rank;
    std::size_t required;
    DependentVerticesError(std::size_t rank_, std::size_t required_)
        : Error("dependent vertices: rank " + std::to_string(rank_) + " < " +
                std::to_string(required_)),
          rank(rank_),
          required(required_) {}
};

/// A label was used that the complex's vertex table does not contain.
struct UnknownVertexError : Error {
    explicit UnknownVertexError(const std::string& label)
        : Error("unknown vertex label: " + label) {}
};

/// Validators and dimension() refuse empty complexes.
struct EmptyComplexError : Error {
    EmptyComplexError() : Error("complex has no simplices") {}
};

/// Query point does not belong to the geometric realization.
struct NotInRealizationError : Error {
    NotInRealizationError() : Error("point is not in the realization") {}
};

/// Strict document parse failure; line/column are 1-based.
struct ScxParseError : Error {
    std::size_t line;
    std::size_t column;
    ScxParseError(std::size_t line_, std::size_t column_, const std::string& msg)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) +
                ": " + msg),
          line(line_),
          column(column_) {}
};

}  // namespace scx
