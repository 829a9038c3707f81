#pragma once

#include <stdexcept>
#include <string>

namespace rook {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input. The CLI maps these to exit code 2.
struct UsageError : Error {
    using Error::Error;
};

struct ParseError : UsageError {
    using UsageError::UsageError;
};

// A sequence of parts that is not weakly decreasing and positive.
struct NotAPartition : ParseError {
    using ParseError::ParseError;
};

// mu_i > lambda_i for some row.
struct NotContained : ParseError {
    using ParseError::ParseError;
};

// A board row or column with no cell.
struct EmptyLine : ParseError {
    using ParseError::ParseError;
};

// A necklace term whose size differs from k.
struct WrongSize : ParseError {
    using ParseError::ParseError;
};

struct OutOfRange : ParseError {
    using ParseError::ParseError;
};

struct SizeMismatch : UsageError {
    using UsageError::UsageError;
};

// A basis decodes to a cell outside the shape; doubles as a non-basis
// certificate for the offending set.
struct OffBoard : UsageError {
    int row;
    int col;
    OffBoard(int row_, int col_)
        : UsageError("forced cell (" + std::to_string(row_) + "," + std::to_string(col_) +
                     ") is not on the shape"),
          row(row_),
          col(col_) {}
};

struct IndexOutOfRange : UsageError {
    using UsageError::UsageError;
};

struct DisconnectedShape : UsageError {
    using UsageError::UsageError;
};

struct IncompatibleCorners : UsageError {
    using UsageError::UsageError;
};

// Querying r_i / c_i where the defining set is empty.
struct UndefinedStat : UsageError {
    using UsageError::UsageError;
};

// Violated internal invariant. The CLI maps these to exit code 1.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace rook
