#include "doctest.h"

#include <cstdint>
#include <random>
#include <string>

#include "hcal/errors.hpp"
#include "hcal/molad.hpp"
#include "hcal/new_year.hpp"

using namespace hcal;

TEST_CASE("rosh hashanah reference days") {
    CHECK(rosh_hashanah(1) == 2);
    CHECK(rosh_hashanah(2) == 357);
    CHECK(rosh_hashanah(5782) == 2111469);
    CHECK(rosh_hashanah(5783) == 2111853);
    CHECK(day_of_week(rosh_hashanah(5782)) == 3);  // Tuesday
    CHECK(day_of_week(rosh_hashanah(5783)) == 2);  // Monday
}

TEST_CASE("year lengths, including recent oracle years") {
    CHECK(year_length(1) == 355);
    CHECK(year_length(5779) == 385);
    CHECK(year_length(5780) == 355);
    CHECK(year_length(5781) == 353);
    CHECK(year_length(5782) == 384);
    CHECK(year_length(5783) == 355);
    CHECK(year_length(5784) == 383);
    CHECK(year_length(5785) == 355);
    CHECK(year_length(5786) == 354);
}

TEST_CASE("applied dechiyot for known years") {
    CHECK(applied_dechiyah(5782) == Dechiyah::none);
    CHECK(applied_dechiyah(2) == Dechiyah::second);    // delayed molad on a Friday
    CHECK(applied_dechiyah(5745) == Dechiyah::third);
    CHECK(applied_dechiyah(5766) == Dechiyah::fourth);
}

TEST_CASE("each dechiyah moves Rosh Hashanah by its fixed amount") {
    std::mt19937_64 rng(1984);
    std::uniform_int_distribution<std::int64_t> dist(1, 200000);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t y = dist(rng);
        const Moment dm = delayed_molad(y);
        const std::int64_t shift = rosh_hashanah(y) - dm.day;
        switch (applied_dechiyah(y)) {
            case Dechiyah::none: CHECK(shift == 0); break;
            case Dechiyah::second: CHECK(shift == 1); break;
            case Dechiyah::third: CHECK(shift == 2); break;
            case Dechiyah::fourth: CHECK(shift == 1); break;
        }
        CHECK(rosh_hashanah_from_delayed(dm, y) == rosh_hashanah(y));
        CHECK(dechiyah_from_delayed(dm, y) == applied_dechiyah(y));
    }
}

TEST_CASE("rosh hashanah avoids Sunday, Wednesday, Friday") {
    for (std::int64_t y = 1; y <= 1000; ++y) {
        const int dow = day_of_week(rosh_hashanah(y));
        CHECK(dow != 1);
        CHECK(dow != 4);
        CHECK(dow != 6);
    }
}

TEST_CASE("year classes") {
    CHECK(year_class(353) == YearClass::defective);
    CHECK(year_class(383) == YearClass::defective);
    CHECK(year_class(354) == YearClass::regular);
    CHECK(year_class(384) == YearClass::regular);
    CHECK(year_class(355) == YearClass::complete);
    CHECK(year_class(385) == YearClass::complete);
    CHECK_THROWS_AS(year_class(356), InvalidDate);
    CHECK_THROWS_AS(year_class(382), InvalidDate);
    CHECK_THROWS_AS(year_class(0), InvalidDate);
}

TEST_CASE("keviyah of known years") {
    const Keviyah k5782 = keviyah(5782);
    CHECK(k5782.start_dow == 3);
    CHECK(k5782.length == 384);
    CHECK(k5782.leap);
    CHECK(k5782.cls == YearClass::regular);

    const Keviyah k1 = keviyah(1);
    CHECK(k1.start_dow == 2);
    CHECK(k1.length == 355);
    CHECK_FALSE(k1.leap);
    CHECK(k1.cls == YearClass::complete);
}

TEST_CASE("keviyah combinations obey the start-day rules") {
    for (std::int64_t y = 1; y <= 2000; ++y) {
        const Keviyah k = keviyah(y);
        switch (k.start_dow) {
            case 3:
                CHECK((k.length == 354 || k.length == 384));
                break;
            case 0:
            case 2:
                CHECK((k.length == 353 || k.length == 355 || k.length == 383 ||
                       k.length == 385));
                break;
            case 5:
                CHECK((k.length == 354 || k.length == 355 || k.length == 383 ||
                       k.length == 385));
                break;
            default:
                FAIL("Rosh Hashanah on forbidden weekday ", k.start_dow, " in year ", y);
        }
        CHECK(k.leap == is_leap(y));
        CHECK(k.cls == year_class(k.length));
    }
}

TEST_CASE("enum renderings") {
    CHECK(std::string(to_string(Dechiyah::none)) == "none");
    CHECK(std::string(to_string(Dechiyah::second)) == "second");
    CHECK(std::string(to_string(Dechiyah::third)) == "third");
    CHECK(std::string(to_string(Dechiyah::fourth)) == "fourth");
    CHECK(std::string(to_string(YearClass::defective)) == "defective");
    CHECK(std::string(to_string(YearClass::regular)) == "regular");
    CHECK(std::string(to_string(YearClass::complete)) == "complete");
}
