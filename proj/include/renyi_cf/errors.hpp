#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace renyi {

// Base class for every domain error raised by the library. `kind()` is the
// stable machine-readable tag the CLI puts into its error object.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual std::string_view kind() const noexcept = 0;
};

// A digit floor(N/(1-x)) is infinite (x == 1) or exceeds the configured cap.
class DigitOverflow : public Error {
public:
    using Error::Error;
    std::string_view kind() const noexcept override { return "DigitOverflow"; }
};

// A certified truncation bound exceeds the caller's tolerance.
class TruncationTooCoarse : public Error {
public:
    using Error::Error;
    std::string_view kind() const noexcept override { return "TruncationTooCoarse"; }
};

// Requested enumeration exceeds the configured work budget.
class ComplexityGuard : public Error {
public:
    using Error::Error;
    std::string_view kind() const noexcept override { return "ComplexityGuard"; }
};

class InsufficientData : public Error {
public:
    using Error::Error;
    std::string_view kind() const noexcept override { return "InsufficientData"; }
};

}  // namespace renyi
