#pragma once

#include <cstdint>

#include "hcal/moment.hpp"

namespace hcal {

/// Which postponement rule moved Rosh Hashanah past the day of the delayed
/// molad.  The first (noon) rule is absorbed into the delayed molad itself
/// and never appears here; at most one of the others applies in any year.
enum class Dechiyah { none, second, third, fourth };

/// Length class of a year: 353/383 days, 354/384, or 355/385.  The short and
/// long variants come from Cheshvan and Kislev flexing between 29 and 30.
enum class YearClass { defective, regular, complete };

/// A year's character: the weekday its Rosh Hashanah falls on together with
/// its length.  Only 14 of the 24 conceivable combinations ever occur.
struct Keviyah {
    int start_dow = 0;  // 0 Saturday, 2 Monday, 3 Tuesday, 5 Thursday
    int length = 0;     // 353..355 common, 383..385 leap
    bool leap = false;
    YearClass cls = YearClass::regular;

    friend constexpr bool operator==(const Keviyah&, const Keviyah&) = default;
};

/// Absolute day of Tishri 1 of `year`: the day of the delayed molad, pushed
/// out by at most one of the postponement rules.
std::int64_t rosh_hashanah(std::int64_t year);

/// Same, given the year's delayed molad (avoids recomputing the molad in
/// linear sweeps).
std::int64_t rosh_hashanah_from_delayed(const Moment& dm, std::int64_t year);

/// rosh_hashanah(year + 1) - rosh_hashanah(year).  Always one of
/// 353/354/355 for common years and 383/384/385 for leap years.
int year_length(std::int64_t year);

/// Which postponement fired for `year`.
Dechiyah applied_dechiyah(std::int64_t year);
Dechiyah dechiyah_from_delayed(const Moment& dm, std::int64_t year);

Keviyah keviyah(std::int64_t year);

/// Classifies an admissible year length; throws InvalidDate otherwise.
YearClass year_class(int length);

const char* to_string(Dechiyah d);
const char* to_string(YearClass c);

}  // namespace hcal
