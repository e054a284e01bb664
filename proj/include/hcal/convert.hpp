#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "hcal/moment.hpp"

namespace hcal {

/// A Hebrew calendar date.  Months are encoded 1 = Tishri, 2 = Cheshvan,
/// 3 = Kislev, 4 = Tevat, 5 = Shevat, 6 = Adar (Adar II in leap years),
/// 7 = Nisan, 8 = Iyar, 9 = Sivan, 10 = Tammuz, 11 = Av, 12 = Elul, and the
/// inserted leap month Adar I as 13, though it falls between 5 and 6.
struct HebrewDate {
    int day = 1;
    int month = 1;
    std::int64_t year = 1;  // year >= 1

    friend constexpr bool operator==(const HebrewDate&, const HebrewDate&) = default;
};

/// A proleptic Gregorian date with astronomical year numbering: year 0
/// exists, year -3760 is the civil 3761 B.C.E.
struct GregorianDate {
    int day = 1;
    int month = 1;  // 1 = January
    std::int64_t year = 1;

    friend constexpr bool operator==(const GregorianDate&, const GregorianDate&) = default;
};

/// Conversion domain bounds.  The Hebrew side memoizes new-year days, so its
/// reach is capped to keep that table small; the caps leave ten full
/// 689,472-year periods of headroom and both sides far from overflow.
inline constexpr std::int64_t max_hebrew_year = 10'000'000;
inline constexpr std::int64_t max_gregorian_year = 1'000'000'000;  // absolute value

/// Length of a Hebrew month given the enclosing year's length.  Cheshvan (2)
/// has 30 days only in complete years, Kislev (3) has 29 only in defective
/// years; otherwise odd months have 30 days and even months 29, with the
/// leap month (13) taking 30.  Throws InvalidDate on an inadmissible year
/// length or month code.
int month_length(int month, int year_len);

/// Days of the year that precede `month`, counting Adar I between Shevat and
/// Adar II in leap years.
int days_preceding(int month, int year_len);

/// Encoded month numbers in calendar order for a common or leap year.
std::span<const int> month_sequence(bool leap);

/// Throws InvalidDate unless the date exists.
void validate(const HebrewDate& d);
void validate(const GregorianDate& d);

/// Hebrew date -> absolute day number.  Throws InvalidDate.
std::int64_t to_absolute(const HebrewDate& d);

/// Absolute day -> Hebrew date.  The Hebrew calendar starts at absolute day
/// 2 (Tishri 1, year 1); earlier days throw OutOfDomain.
HebrewDate to_hebrew(std::int64_t absolute_day);

/// Proleptic Gregorian leap rule: divisible by 4 and not by 100 unless
/// by 400.
constexpr bool is_gregorian_leap(std::int64_t year) {
    return year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
}

int gregorian_month_length(int month, std::int64_t year);

/// Gregorian date -> absolute day number; September 6, -3760 is day 1.
/// Total over all years; days before the epoch are zero or negative.
std::int64_t to_absolute(const GregorianDate& d);

GregorianDate to_gregorian(std::int64_t absolute_day);

/// Cross-calendar conversions by way of the absolute day number.
GregorianDate to_gregorian(const HebrewDate& d);
HebrewDate to_hebrew(const GregorianDate& d);

/// Canonical text forms: "H:YYYY-MM-DD" and "G:±YYYY-MM-DD" (years zero
/// padded to four digits, Gregorian years always signed).
std::string to_string(const HebrewDate& d);
std::string to_string(const GregorianDate& d);
HebrewDate parse_hebrew(std::string_view text);
GregorianDate parse_gregorian(std::string_view text);

}  // namespace hcal
