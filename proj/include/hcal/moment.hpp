#pragma once

#include <cstdint>

namespace hcal {

inline constexpr std::int64_t parts_per_hour = 1080;
inline constexpr std::int64_t hours_per_day = 24;
inline constexpr std::int64_t parts_per_day = hours_per_day * parts_per_hour;    // 25920
inline constexpr std::int64_t parts_per_week = 7 * parts_per_day;                // 181440

/// An instant or duration in the calendar's units: whole days, hours and
/// parts, with 1080 parts to the hour.  When used as an instant, `day` is an
/// absolute day number (day 1 chosen so that the reference molad of year 1
/// falls on day 2, a Monday) and the day runs from 6 PM to 6 PM.
///
/// Invariant for normalized values: 0 <= hour < 24, 0 <= part < 1080,
/// day >= 0.  All arithmetic is exact; totals over the full 689,472-year
/// verification period stay below 2^63 parts.
struct Moment {
    std::int64_t day = 0;
    std::int32_t hour = 0;
    std::int32_t part = 0;

    friend constexpr bool operator==(const Moment&, const Moment&) = default;
};

/// Mean synodic month: 29 days, 12 hours, 793 parts.
inline constexpr Moment lunation = {29, 12, 793};

/// Molad Beharad, the reference molad of year 1: day 2 at 5:204.
inline constexpr Moment beharad = {2, 5, 204};

/// Total length in parts: 25920*day + 1080*hour + part.
constexpr std::int64_t total_parts(const Moment& m) {
    return parts_per_day * m.day + parts_per_hour * m.hour + m.part;
}

/// Rebuild a normalized Moment from a non-negative part count.
constexpr Moment moment_from_parts(std::int64_t parts) {
    return {parts / parts_per_day,
            static_cast<std::int32_t>(parts % parts_per_day / parts_per_hour),
            static_cast<std::int32_t>(parts % parts_per_hour)};
}

/// Normalized sum: parts carry into hours at 1080, hours into days at 24.
constexpr Moment operator+(const Moment& x, const Moment& y) {
    const std::int64_t parts = x.part + y.part;
    const std::int64_t hours = x.hour + y.hour + parts / parts_per_hour;
    return {x.day + y.day + hours / hours_per_day,
            static_cast<std::int32_t>(hours % hours_per_day),
            static_cast<std::int32_t>(parts % parts_per_hour)};
}

/// Normalized product of a non-negative count and a Moment.
constexpr Moment operator*(std::int64_t n, const Moment& x) {
    const std::int64_t parts = n * x.part;
    const std::int64_t hours = n * x.hour + parts / parts_per_hour;
    return {n * x.day + hours / hours_per_day,
            static_cast<std::int32_t>(hours % hours_per_day),
            static_cast<std::int32_t>(parts % parts_per_hour)};
}

/// Difference x - y; requires x >= y.
constexpr Moment operator-(const Moment& x, const Moment& y) {
    return moment_from_parts(total_parts(x) - total_parts(y));
}

/// Day of the week of an absolute day number: 1 = Sunday .. 6 = Friday,
/// 0 = Saturday.  The week starts Sunday (which begins 6 PM Saturday), and
/// day 2 is a Monday.
constexpr int day_of_week(std::int64_t day) {
    return static_cast<int>((day % 7 + 7) % 7);
}

/// True iff the time of day of `m` is at or later than `hour`:`part`.
/// Compares time of day only; the day field is ignored.
constexpr bool at_or_after(const Moment& m, int hour, int part) {
    return parts_per_hour * m.hour + m.part >= parts_per_hour * hour + part;
}

/// English name for a day-of-week code as returned by day_of_week().
constexpr const char* day_name(int dow) {
    constexpr const char* names[7] = {"Saturday", "Sunday",   "Monday", "Tuesday",
                                      "Wednesday", "Thursday", "Friday"};
    return names[dow % 7];
}

}  // namespace hcal
