#include "hcal/molad.hpp"

#include "hcal/errors.hpp"

#include <string>

namespace hcal {

Moment molad(std::int64_t year) {
    std::int64_t prior_months = 0;
    for (std::int64_t y = 1; y < year; ++y) {
        prior_months += months_in_year(y);
    }
    return beharad + prior_months * lunation;
}

Moment delayed_molad(std::int64_t year) {
    return molad(year) + six_hours;
}

Moment monthly_molad(int month, std::int64_t year) {
    if (month < 1 || month > 13) {
        throw InvalidDate("month code out of range: " + std::to_string(month));
    }
    if (month == 13 && !is_leap(year)) {
        throw InvalidDate("month 13 (Adar I) does not exist in common year " +
                          std::to_string(year));
    }
    return molad(year) + months_preceding(month, is_leap(year)) * lunation;
}

MoladCursor::MoladCursor(std::int64_t start_year)
    : year_(start_year), molad_(molad(start_year)) {}

void MoladCursor::advance() {
    molad_ = molad_next(molad_, year_);
    ++year_;
}

}  // namespace hcal
