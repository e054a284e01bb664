#pragma once

#include <stdexcept>
#include <string>

namespace hcal {

/// Base class for all errors raised by the calendar engine.
struct CalendarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A date that violates its calendar's rules (bad month code, day past the
/// end of the month, Adar I in a common year, malformed text form, ...).
struct InvalidDate : CalendarError {
    using CalendarError::CalendarError;
};

/// A moment that falls outside the Hebrew calendar's domain, which starts
/// at Tishri 1 of year 1 (absolute day 2).
struct OutOfDomain : CalendarError {
    using CalendarError::CalendarError;
};

}  // namespace hcal
