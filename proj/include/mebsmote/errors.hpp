#pragma once

#include <stdexcept>
#include <string>

namespace mebsmote {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two points (or a point and a ball) live in spaces of different dimension.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Malformed argument: empty input, non-finite coordinate, bad option value.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// The minority class is too small for the configured neighbour count.
class InsufficientNeighbors : public Error {
public:
    InsufficientNeighbors(std::size_t pool_size, std::size_t k)
        : Error("insufficient neighbors: pool has " + std::to_string(pool_size) +
                " samples but k=" + std::to_string(k) + " requires at least " +
                std::to_string(k + 1))
        , pool_size_(pool_size)
        , k_(k)
    {}

    std::size_t pool_size() const noexcept { return pool_size_; }
    std::size_t k() const noexcept { return k_; }

private:
    std::size_t pool_size_;
    std::size_t k_;
};

// An operation needed both classes but only one was present.
class SingleClass : public Error {
public:
    using Error::Error;
};

// File could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

// File contents could not be interpreted (CSV syntax, non-numeric values).
class ParseError : public Error {
public:
    using Error::Error;
};

// The enclosing-ball solver could not produce a ball within tolerance.
class GeometryError : public Error {
public:
    using Error::Error;
};

} // namespace mebsmote
