#include "hcal/convert.hpp"

#include "hcal/errors.hpp"
#include "hcal/molad.hpp"
#include "hcal/new_year.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace hcal {

namespace {

constexpr int common_order[12] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
constexpr int leap_order[13] = {1, 2, 3, 4, 5, 13, 6, 7, 8, 9, 10, 11, 12};

constexpr bool leap_length(int year_len) {
    return year_len >= 383;
}

// Absolute days of Tishri 1, memoized for all years up to the highest one
// seen so far.  Grown by stepping the molad recurrence from the last cached
// year, which yields the same values as the summation definition.
class NewYearTable {
public:
    static NewYearTable& instance() {
        static NewYearTable table;
        return table;
    }

    std::int64_t rh(std::int64_t year) {
        {
            std::shared_lock lock(mu_);
            if (year <= static_cast<std::int64_t>(days_.size())) {
                return days_[year - 1];
            }
        }
        std::unique_lock lock(mu_);
        extend_to(year);
        return days_[year - 1];
    }

    int length(std::int64_t year) {
        {
            std::shared_lock lock(mu_);
            if (year + 1 <= static_cast<std::int64_t>(days_.size())) {
                return static_cast<int>(days_[year] - days_[year - 1]);
            }
        }
        std::unique_lock lock(mu_);
        extend_to(year + 1);
        return static_cast<int>(days_[year] - days_[year - 1]);
    }

    // Year containing the given absolute day; requires absolute_day >= 2.
    std::int64_t year_of(std::int64_t absolute_day) {
        // 3652468/10000 approximates the mean year length; the estimate is
        // off by at most a year or two, fixed by the slides below.
        std::int64_t y = std::max<std::int64_t>(1, absolute_day * 10000 / 3652468);
        rh(y + 4);
        while (rh(y) > absolute_day) {
            --y;
        }
        while (rh(y + 1) <= absolute_day) {
            ++y;
        }
        return y;
    }

private:
    void extend_to(std::int64_t year) {
        while (static_cast<std::int64_t>(days_.size()) < year) {
            const std::int64_t y = static_cast<std::int64_t>(days_.size()) + 1;
            days_.push_back(rosh_hashanah_from_delayed(next_molad_ + six_hours, y));
            next_molad_ = molad_next(next_molad_, y);
        }
    }

    std::shared_mutex mu_;
    std::vector<std::int64_t> days_;  // days_[i] = Tishri 1 of year i+1
    Moment next_molad_ = beharad;     // molad of year days_.size() + 1
};

// Validates and returns the year length, which every caller needs anyway.
int checked_year_length(const HebrewDate& d) {
    if (d.year < 1) {
        throw InvalidDate("Hebrew year must be >= 1, got " + std::to_string(d.year));
    }
    if (d.year > max_hebrew_year) {
        throw OutOfDomain("Hebrew year " + std::to_string(d.year) +
                          " beyond supported maximum " + std::to_string(max_hebrew_year));
    }
    const int len = NewYearTable::instance().length(d.year);
    if (d.month < 1 || d.month > 13 || (d.month == 13 && !leap_length(len))) {
        throw InvalidDate("no month " + std::to_string(d.month) + " in Hebrew year " +
                          std::to_string(d.year));
    }
    const int ml = month_length(d.month, len);
    if (d.day < 1 || d.day > ml) {
        throw InvalidDate("day " + std::to_string(d.day) + " out of range for month " +
                          std::to_string(d.month) + " of Hebrew year " +
                          std::to_string(d.year) + " (" + std::to_string(ml) + " days)");
    }
    return len;
}

}  // namespace

int month_length(int month, int year_len) {
    switch (year_len) {
        case 353:
        case 354:
        case 355:
        case 383:
        case 384:
        case 385:
            break;
        default:
            throw InvalidDate("inadmissible year length: " + std::to_string(year_len));
    }
    if (month < 1 || month > 13 || (month == 13 && !leap_length(year_len))) {
        throw InvalidDate("bad month code " + std::to_string(month) + " for year length " +
                          std::to_string(year_len));
    }
    switch (month) {
        case 2:  // Cheshvan
            return year_len == 355 || year_len == 385 ? 30 : 29;
        case 3:  // Kislev
            return year_len == 353 || year_len == 383 ? 29 : 30;
        default:  // fixed months alternate 30/29 from Tishri; Adar I (13) has 30
            return month % 2 == 1 ? 30 : 29;
    }
}

int days_preceding(int month, int year_len) {
    int days = 0;
    for (int m = 1; m < month && (m < 6 || month != 13); ++m) {
        days += month_length(m, year_len);
    }
    if (leap_length(year_len) && month >= 6 && month != 13) {
        days += 30;  // Adar I
    }
    return days;
}

std::span<const int> month_sequence(bool leap) {
    return leap ? std::span<const int>(leap_order) : std::span<const int>(common_order);
}

void validate(const HebrewDate& d) {
    checked_year_length(d);
}

std::int64_t to_absolute(const HebrewDate& d) {
    const int len = checked_year_length(d);
    return NewYearTable::instance().rh(d.year) - 1 + days_preceding(d.month, len) + d.day;
}

HebrewDate to_hebrew(std::int64_t absolute_day) {
    if (absolute_day < 2) {
        throw OutOfDomain("absolute day " + std::to_string(absolute_day) +
                          " precedes Tishri 1 of Hebrew year 1 (absolute day 2)");
    }
    if (absolute_day > 366 * max_hebrew_year) {  // above any admissible mean year
        throw OutOfDomain("absolute day " + std::to_string(absolute_day) +
                          " beyond Hebrew year " + std::to_string(max_hebrew_year));
    }
    auto& table = NewYearTable::instance();
    const std::int64_t year = table.year_of(absolute_day);
    if (year > max_hebrew_year) {
        throw OutOfDomain("absolute day " + std::to_string(absolute_day) +
                          " beyond Hebrew year " + std::to_string(max_hebrew_year));
    }
    const int len = table.length(year);
    int day_in_year = static_cast<int>(absolute_day - table.rh(year) + 1);
    for (int month : month_sequence(leap_length(len))) {
        const int ml = month_length(month, len);
        if (day_in_year <= ml) {
            return {day_in_year, month, year};
        }
        day_in_year -= ml;
    }
    throw CalendarError("unreachable: day past end of year");  // len bounds day_in_year
}

namespace {

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    return a / b - ((a % b != 0 && (a < 0) != (b < 0)) ? 1 : 0);
}

constexpr int days_before_month[12] = {0,   31,  59,  90,  120, 151,
                                       181, 212, 243, 273, 304, 334};

// Days before January 1 of year y, counted from a fixed origin.
constexpr std::int64_t gregorian_days_before_year(std::int64_t y) {
    const std::int64_t prior = y - 1;
    return 365 * prior + floor_div(prior, 4) - floor_div(prior, 100) + floor_div(prior, 400);
}

constexpr std::int64_t gregorian_day_number(std::int64_t year, int month, int day) {
    return gregorian_days_before_year(year) + days_before_month[month - 1] +
           ((month > 2 && is_gregorian_leap(year)) ? 1 : 0) + day;
}

// Fixes absolute day 1 = September 6, -3760.
constexpr std::int64_t epoch_shift = 1 - gregorian_day_number(-3760, 9, 6);

}  // namespace

int gregorian_month_length(int month, std::int64_t year) {
    static constexpr int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) {
        throw InvalidDate("Gregorian month out of range: " + std::to_string(month));
    }
    if (month == 2 && is_gregorian_leap(year)) {
        return 29;
    }
    return lengths[month - 1];
}

void validate(const GregorianDate& d) {
    if (d.year < -max_gregorian_year || d.year > max_gregorian_year) {
        throw OutOfDomain("Gregorian year " + std::to_string(d.year) +
                          " beyond supported range");
    }
    const int ml = gregorian_month_length(d.month, d.year);
    if (d.day < 1 || d.day > ml) {
        throw InvalidDate("day " + std::to_string(d.day) + " out of range for " +
                          std::to_string(d.year) + "-" + std::to_string(d.month) + " (" +
                          std::to_string(ml) + " days)");
    }
}

std::int64_t to_absolute(const GregorianDate& d) {
    validate(d);
    return gregorian_day_number(d.year, d.month, d.day) + epoch_shift;
}

GregorianDate to_gregorian(std::int64_t absolute_day) {
    constexpr std::int64_t lo = gregorian_day_number(-max_gregorian_year, 1, 1) + epoch_shift;
    constexpr std::int64_t hi = gregorian_day_number(max_gregorian_year, 12, 31) + epoch_shift;
    if (absolute_day < lo || absolute_day > hi) {
        throw OutOfDomain("absolute day " + std::to_string(absolute_day) +
                          " beyond supported Gregorian range");
    }
    const std::int64_t n = absolute_day - epoch_shift;
    std::int64_t year = floor_div(400 * n, 146097) + 1;
    while (n <= gregorian_days_before_year(year)) {
        --year;
    }
    while (n > gregorian_days_before_year(year + 1)) {
        ++year;
    }
    int day_in_year = static_cast<int>(n - gregorian_days_before_year(year));
    for (int month = 1; month <= 12; ++month) {
        const int ml = gregorian_month_length(month, year);
        if (day_in_year <= ml) {
            return {day_in_year, month, year};
        }
        day_in_year -= ml;
    }
    throw CalendarError("unreachable: day past end of Gregorian year");
}

GregorianDate to_gregorian(const HebrewDate& d) {
    return to_gregorian(to_absolute(d));
}

HebrewDate to_hebrew(const GregorianDate& d) {
    return to_hebrew(to_absolute(d));
}

std::string to_string(const HebrewDate& d) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "H:%04lld-%02d-%02d", static_cast<long long>(d.year),
                  d.month, d.day);
    return buf;
}

std::string to_string(const GregorianDate& d) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "G:%c%04lld-%02d-%02d", d.year < 0 ? '-' : '+',
                  static_cast<long long>(d.year < 0 ? -d.year : d.year), d.month, d.day);
    return buf;
}

namespace {

// Parses "<year>-<MM>-<DD>" after any calendar prefix and sign.
void parse_ymd(std::string_view text, std::string_view original, std::int64_t& year,
               int& month, int& day) {
    const auto parse_int = [&](std::string_view piece, auto& out) {
        const auto [ptr, ec] =
            std::from_chars(piece.data(), piece.data() + piece.size(), out);
        if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
            throw InvalidDate("cannot parse date literal: " + std::string(original));
        }
    };
    const auto dash1 = text.find('-');
    const auto dash2 = dash1 == std::string_view::npos ? dash1 : text.find('-', dash1 + 1);
    if (dash2 == std::string_view::npos) {
        throw InvalidDate("cannot parse date literal: " + std::string(original));
    }
    parse_int(text.substr(0, dash1), year);
    parse_int(text.substr(dash1 + 1, dash2 - dash1 - 1), month);
    parse_int(text.substr(dash2 + 1), day);
}

}  // namespace

HebrewDate parse_hebrew(std::string_view text) {
    if (text.size() < 2 || text.substr(0, 2) != "H:") {
        throw InvalidDate("Hebrew date literal must start with \"H:\": " + std::string(text));
    }
    HebrewDate d;
    parse_ymd(text.substr(2), text, d.year, d.month, d.day);
    validate(d);
    return d;
}

GregorianDate parse_gregorian(std::string_view text) {
    if (text.size() < 2 || text.substr(0, 2) != "G:") {
        throw InvalidDate("Gregorian date literal must start with \"G:\": " +
                          std::string(text));
    }
    std::string_view rest = text.substr(2);
    std::int64_t sign = 1;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        sign = rest.front() == '-' ? -1 : 1;
        rest.remove_prefix(1);
    }
    GregorianDate d;
    parse_ymd(rest, text, d.year, d.month, d.day);
    d.year *= sign;
    validate(d);
    return d;
}

}  // namespace hcal
