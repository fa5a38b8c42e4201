#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rieszap {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected input: bad parameters, malformed sets, undersized tables.
class InputError : public Error {
public:
    using Error::Error;
};

class EmptyInput : public InputError {
public:
    using InputError::InputError;
};

class InvalidArc : public InputError {
public:
    using InputError::InputError;
};

class OverlapError : public InputError {
public:
    using InputError::InputError;
};

class ResolutionError : public InputError {
public:
    using InputError::InputError;
};

class DegenerateSet : public InputError {
public:
    using InputError::InputError;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

class ScheduleError : public InputError {
public:
    using InputError::InputError;
};

class TableTooSmall : public InputError {
public:
    using InputError::InputError;
};

class InvalidArgument : public InputError {
public:
    using InputError::InputError;
};

// A finite search ran out of room.
class SearchError : public Error {
public:
    using Error::Error;
};

class ScanExhausted : public SearchError {
public:
    ScanExhausted(const std::string& what, std::int64_t best_shift, double best_lambda_min)
        : SearchError(what), best_shift_(best_shift), best_lambda_min_(best_lambda_min) {}

    std::int64_t best_shift() const noexcept { return best_shift_; }
    double best_lambda_min() const noexcept { return best_lambda_min_; }

private:
    std::int64_t best_shift_;
    double best_lambda_min_;
};

class NotEnoughBlocks : public SearchError {
public:
    using SearchError::SearchError;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace rieszap
