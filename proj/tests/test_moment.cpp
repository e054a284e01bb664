#include "doctest.h"

#include <cstdint>
#include <random>

#include "hcal/moment.hpp"

using namespace hcal;

TEST_CASE("part bookkeeping constants") {
    CHECK(parts_per_hour == 1080);
    CHECK(hours_per_day == 24);
    CHECK(parts_per_day == 25920);
    CHECK(parts_per_week == 181440);
}

TEST_CASE("total_parts of the named moments") {
    CHECK(total_parts(lunation) == 765433);
    CHECK(total_parts(beharad) == 57444);
    CHECK(total_parts(Moment{0, 0, 0}) == 0);
    CHECK(total_parts(Moment{1, 0, 0}) == parts_per_day);
}

TEST_CASE("moment_from_parts inverts total_parts") {
    CHECK(moment_from_parts(765433) == lunation);
    CHECK(moment_from_parts(57444) == beharad);
    std::mt19937_64 rng(20210907);
    std::uniform_int_distribution<std::int64_t> dist(0, std::int64_t{1} << 50);
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t p = dist(rng);
        const Moment m = moment_from_parts(p);
        CHECK(total_parts(m) == p);
        CHECK(m.hour >= 0);
        CHECK(m.hour < hours_per_day);
        CHECK(m.part >= 0);
        CHECK(m.part < parts_per_hour);
    }
}

TEST_CASE("addition carries parts and hours") {
    CHECK(Moment{0, 23, 1000} + Moment{0, 0, 80} == Moment{1, 0, 0});
    CHECK(Moment{0, 0, 0} + lunation == lunation);
    CHECK(beharad + 12 * lunation == Moment{356, 14, 0});
}

TEST_CASE("multiples of the lunation") {
    CHECK(0 * lunation == Moment{0, 0, 0});
    CHECK(1 * lunation == lunation);
    CHECK(12 * lunation == Moment{354, 8, 876});
    CHECK(13 * lunation == Moment{383, 21, 589});
    CHECK(5 * lunation == Moment{147, 15, 725});
    Moment sum{0, 0, 0};
    for (int k = 0; k <= 40; ++k) {
        CHECK(k * lunation == sum);
        sum = sum + lunation;
    }
}

TEST_CASE("arithmetic agrees with part counts") {
    std::mt19937_64 rng(5782);
    std::uniform_int_distribution<std::int64_t> dist(0, std::int64_t{1} << 40);
    for (int i = 0; i < 500; ++i) {
        const Moment a = moment_from_parts(dist(rng));
        const Moment b = moment_from_parts(dist(rng));
        CHECK(a + b == moment_from_parts(total_parts(a) + total_parts(b)));
        CHECK(a + b == b + a);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("day_of_week is the floor residue mod 7") {
    CHECK(day_of_week(0) == 0);   // Saturday
    CHECK(day_of_week(2) == 2);   // Beharad's day is a Monday
    CHECK(day_of_week(356) == 6); // Friday
    CHECK(day_of_week(2111469) == 3);
    CHECK(day_of_week(-1) == 6);
    CHECK(day_of_week(-7) == 0);
    for (std::int64_t d = -20; d <= 20; ++d) {
        CHECK(day_of_week(d) == day_of_week(d + 7));
    }
}

TEST_CASE("day names") {
    CHECK(day_name(0) == std::string_view("Saturday"));
    CHECK(day_name(1) == std::string_view("Sunday"));
    CHECK(day_name(2) == std::string_view("Monday"));
    CHECK(day_name(3) == std::string_view("Tuesday"));
    CHECK(day_name(5) == std::string_view("Thursday"));
}

TEST_CASE("at_or_after compares time of day only, inclusively") {
    CHECK(at_or_after(Moment{0, 15, 204}, 15, 204));
    CHECK_FALSE(at_or_after(Moment{0, 15, 203}, 15, 204));
    CHECK(at_or_after(Moment{0, 16, 0}, 15, 204));
    CHECK_FALSE(at_or_after(Moment{0, 9, 204}, 15, 204));
    CHECK(at_or_after(Moment{99, 21, 589}, 21, 589));  // the day is ignored
    CHECK(at_or_after(Moment{0, 18, 0}, 18, 0));
    CHECK_FALSE(at_or_after(Moment{0, 17, 1079}, 18, 0));
}
