#include "doctest.h"

#include <cstdint>
#include <random>

#include "hcal/errors.hpp"
#include "hcal/molad.hpp"

using namespace hcal;

TEST_CASE("metonic leap pattern") {
    // leap years of the 19-year cycle: 3, 6, 8, 11, 14, 17, 19
    const bool expected[20] = {false, false, false, true,  false, false, true,
                               false, true,  false, false, true,  false, false,
                               true,  false, false, true,  false, true};
    for (int y = 1; y <= 19; ++y) {
        CHECK(is_leap(y) == expected[y]);
        CHECK(is_leap(y) == is_leap(y + 19));
        CHECK(months_in_year(y) == (expected[y] ? 13 : 12));
    }
    int total = 0;
    for (int y = 1; y <= 19; ++y) {
        total += months_in_year(y);
    }
    CHECK(total == 235);
}

TEST_CASE("molad reference values") {
    CHECK(molad(1) == beharad);
    CHECK(molad(2) == Moment{356, 14, 0});  // Molad Adam
    CHECK(molad(5782) == Moment{2111469, 5, 497});
    CHECK(day_of_week(molad(5782).day) == 3);
}

TEST_CASE("delayed molad adds six hours") {
    CHECK(delayed_molad(1) == Moment{2, 11, 204});
    CHECK(delayed_molad(5782) == Moment{2111469, 11, 497});
    // six hours can carry into the next day
    CHECK(Moment{10, 20, 0} + six_hours == Moment{11, 2, 0});
}

TEST_CASE("molad recurrence matches the summation") {
    for (std::int64_t y = 1; y <= 100; ++y) {
        CHECK(molad(y + 1) == molad_next(molad(y), y));
    }
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> dist(1, 30000);
    for (int i = 0; i < 300; ++i) {
        const std::int64_t y = dist(rng);
        CHECK(molad(y + 1) == molad_next(molad(y), y));
    }
    CHECK(molad_next(molad(5782), 5782) == Moment{2111853, 3, 6});
}

TEST_CASE("cursor steps through consecutive years") {
    MoladCursor c(1);
    for (std::int64_t y = 1; y <= 2000; ++y) {
        CHECK(c.year() == y);
        CHECK(c.value() == molad(y));
        c.advance();
    }
    MoladCursor mid(5782);
    CHECK(mid.value() == molad(5782));
}

TEST_CASE("months preceding an encoded month") {
    for (int m = 1; m <= 12; ++m) {
        CHECK(months_preceding(m, false) == m - 1);
    }
    for (int m = 1; m <= 5; ++m) {
        CHECK(months_preceding(m, true) == m - 1);
    }
    CHECK(months_preceding(13, true) == 5);  // Adar I follows Shevat
    for (int m = 6; m <= 12; ++m) {
        CHECK(months_preceding(m, true) == m);
    }
}

TEST_CASE("monthly molad") {
    CHECK(monthly_molad(1, 5782) == molad(5782));
    CHECK(monthly_molad(13, 5782) == Moment{2111616, 21, 142});
    // Adar I sits between Shevat (5) and Adar II (6)
    CHECK(monthly_molad(13, 5782) == monthly_molad(5, 5782) + lunation);
    CHECK(monthly_molad(6, 5782) == monthly_molad(13, 5782) + lunation);
    // in a common year Adar directly follows Shevat
    CHECK(monthly_molad(6, 5781) == monthly_molad(5, 5781) + lunation);
    CHECK(monthly_molad(12, 5783) == molad(5783) + 11 * lunation);
}

TEST_CASE("monthly molad rejects bad months") {
    CHECK_THROWS_AS(monthly_molad(0, 5782), InvalidDate);
    CHECK_THROWS_AS(monthly_molad(14, 5782), InvalidDate);
    CHECK_THROWS_AS(monthly_molad(-1, 5782), InvalidDate);
    CHECK_THROWS_AS(monthly_molad(13, 5781), InvalidDate);  // 5781 is common
    CHECK_NOTHROW(monthly_molad(13, 5782));
}
