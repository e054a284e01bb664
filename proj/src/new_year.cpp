#include "hcal/new_year.hpp"

#include "hcal/errors.hpp"
#include "hcal/molad.hpp"

#include <string>
#include <utility>

namespace hcal {

namespace {

// Shared core of rosh_hashanah and applied_dechiyah: the postponed day plus
// the rule that fired.
std::pair<std::int64_t, Dechiyah> place_new_year(const Moment& dm, std::int64_t year) {
    const std::int64_t day = dm.day;
    const int dw = day_of_week(day);
    if (dw == 1 || dw == 4 || dw == 6) {
        // never on Sunday, Wednesday or Friday
        return {day + 1, Dechiyah::second};
    }
    if (dw == 3 && at_or_after(dm, 15, 204) && !is_leap(year)) {
        // late Tuesday molad of a common year: push to Thursday
        return {day + 2, Dechiyah::third};
    }
    if (dw == 2 && at_or_after(dm, 21, 589) && year > 1 && is_leap(year - 1)) {
        // late Monday molad following a leap year.  The year > 1 guard only
        // protects the year - 1 lookup; for year 1 the delayed molad time is
        // 11:204, so this branch could not fire anyway.
        return {day + 1, Dechiyah::fourth};
    }
    return {day, Dechiyah::none};
}

}  // namespace

std::int64_t rosh_hashanah_from_delayed(const Moment& dm, std::int64_t year) {
    return place_new_year(dm, year).first;
}

std::int64_t rosh_hashanah(std::int64_t year) {
    return rosh_hashanah_from_delayed(delayed_molad(year), year);
}

int year_length(std::int64_t year) {
    return static_cast<int>(rosh_hashanah(year + 1) - rosh_hashanah(year));
}

Dechiyah dechiyah_from_delayed(const Moment& dm, std::int64_t year) {
    return place_new_year(dm, year).second;
}

Dechiyah applied_dechiyah(std::int64_t year) {
    return dechiyah_from_delayed(delayed_molad(year), year);
}

YearClass year_class(int length) {
    switch (length) {
        case 353:
        case 383:
            return YearClass::defective;
        case 354:
        case 384:
            return YearClass::regular;
        case 355:
        case 385:
            return YearClass::complete;
        default:
            throw InvalidDate("inadmissible year length: " + std::to_string(length));
    }
}

Keviyah keviyah(std::int64_t year) {
    const int length = year_length(year);
    return {day_of_week(rosh_hashanah(year)), length, is_leap(year), year_class(length)};
}

const char* to_string(Dechiyah d) {
    switch (d) {
        case Dechiyah::none:
            return "none";
        case Dechiyah::second:
            return "second";
        case Dechiyah::third:
            return "third";
        case Dechiyah::fourth:
            return "fourth";
    }
    return "?";
}

const char* to_string(YearClass c) {
    switch (c) {
        case YearClass::defective:
            return "defective";
        case YearClass::regular:
            return "regular";
        case YearClass::complete:
            return "complete";
    }
    return "?";
}

}  // namespace hcal
