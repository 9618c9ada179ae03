#pragma once

#include <stdexcept>
#include <string>

namespace kron {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// partition_core
struct NonDecreasingError : Error { using Error::Error; };
struct NegativePartError : Error { using Error::Error; };
struct LengthExceededError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// substitution
struct UnsupportedShapeError : Error { using Error::Error; };
struct MatrixIoError : Error { using Error::Error; };

// vpf_eval
struct DimensionMismatchError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct CacheMismatchError : Error { using Error::Error; };

// kron_engine
struct SizeMismatchError : Error { using Error::Error; };
struct LengthBoundError : Error { using Error::Error; };
struct ResourceGuardError : Error { using Error::Error; };

// character_oracle
struct SizeLimitError : Error { using Error::Error; };

// stability_faces
struct NotAPartitionError : Error { using Error::Error; };

// bounds
struct AccountingMismatchError : Error { using Error::Error; };

}  // namespace kron
