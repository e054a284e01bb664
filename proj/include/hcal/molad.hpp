#pragma once

#include <cstdint>

#include "hcal/moment.hpp"

namespace hcal {

/// The six-hour shift that folds the noon postponement into the molad.
inline constexpr Moment six_hours = {0, 6, 0};

/// Leap years repeat on a 19-year cycle: 7 leap years per cycle, giving
/// 12*12 + 7*13 = 235 months every 19 years.
constexpr bool is_leap(std::int64_t year) {
    const int r = static_cast<int>(year % 19);
    return r == 0 || r == 3 || r == 6 || r == 8 || r == 11 || r == 14 || r == 17;
}

constexpr int months_in_year(std::int64_t year) {
    return is_leap(year) ? 13 : 12;
}

/// Molad of Tishri of `year`, computed from first principles: the count of
/// months in all preceding years times the lunation, added to Beharad.
/// Runs in O(year); use MoladCursor or molad_next for long sequences.
Moment molad(std::int64_t year);

/// Steps one year forward: given prev = molad(year), returns molad(year + 1)
/// in O(1).
constexpr Moment molad_next(const Moment& prev, std::int64_t year) {
    return prev + months_in_year(year) * lunation;
}

/// Molad of `year` shifted six hours later.
Moment delayed_molad(std::int64_t year);

/// Count of months of its year that precede the given encoded month in
/// calendar order (Adar I, encoded 13, sits between months 5 and 6).
constexpr int months_preceding(int month, bool leap) {
    return (leap && month >= 6) ? (month == 13 ? 5 : month) : month - 1;
}

/// Molad of a given month.  Months are encoded 1 = Tishri .. 12 = Elul with
/// the inserted leap month (Adar I) encoded as 13, although it falls between
/// months 5 and 6.  Throws InvalidDate for month 13 in a common year or a
/// month code outside [1, 13].
Moment monthly_molad(int month, std::int64_t year);

/// Walks (year, molad) pairs in linear time.  Seeded with the summation
/// molad of the start year, then stepped by the recurrence, so a cursor
/// started mid-range reproduces exactly what a longer walk would see at
/// that year.
class MoladCursor {
public:
    explicit MoladCursor(std::int64_t start_year);

    std::int64_t year() const { return year_; }
    const Moment& value() const { return molad_; }

    void advance();

private:
    std::int64_t year_;
    Moment molad_;
};

}  // namespace hcal
