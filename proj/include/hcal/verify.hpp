#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hcal {

/// Constants of the calendar's 689,472-year period.  The whole pattern of
/// year lengths repeats after n_cycles 19-year cycles, the least number that
/// spans a whole number of weeks; across one period every molad shifts by
/// exactly day_delta days, a multiple of 7, at an unchanged time of day.
struct PeriodConstants {
    static constexpr std::int64_t cycle_parts = 179876755;   // 235 lunations
    static constexpr std::int64_t week_parts = 181440;       // 7 * 24 * 1080
    static constexpr std::int64_t n_cycles = 36288;
    static constexpr std::int64_t period_years = 689472;     // 19 * n_cycles
    static constexpr std::int64_t day_delta = 251827457;
};

/// One failed check in a sweep.  `year` is 0 for checks that are not tied to
/// a year.  Values are rendered without spaces so report lines stay
/// machine-splittable on single blanks.
struct Counterexample {
    std::int64_t year = 0;
    std::string observed;
    std::string expected;
};

struct VerificationReport {
    std::string property_id;
    std::int64_t range_start = 0;
    std::int64_t range_end = 0;
    std::int64_t years_checked = 0;
    bool passed = false;
    std::vector<Counterexample> counterexamples;  // capped; see max_counterexamples
    std::int64_t elapsed_ms = 0;
    std::string note;  // extra stats (e.g. "distinct=14"); not part of the wire format
};

struct SweepOptions {
    std::int64_t start = 1;
    std::int64_t end = PeriodConstants::period_years;
    int jobs = 1;
    std::size_t max_counterexamples = 100;
};

/// Recomputes every PeriodConstants identity from first principles (gcd for
/// the minimal cycle count, plus an explicit divisor scan for minimality).
VerificationReport verify_period_constants();

/// For each sampled year y, checks that y and y + period_years have moladot
/// exactly day_delta days apart at the same time of day, equal weekday and
/// leap status, and equal year length.  Both moladot are computed by the
/// summation definition, independently of each other.
VerificationReport verify_periodicity(std::span<const std::int64_t> years, int jobs = 1);

/// Years 1..1000 plus 1000 deterministic pseudo-random years <= 10^6.
std::vector<std::int64_t> default_periodicity_sample();

/// Every year in range has a length in {353,354,355} (common) or
/// {383,384,385} (leap).  One linear pass over stepped moladot.
VerificationReport verify_year_lengths(const SweepOptions& opt = {});

/// Every year's (start weekday, length) pair satisfies the keviyah rules;
/// when the range covers at least a full period, additionally asserts that
/// exactly 14 distinct pairs occur.
VerificationReport verify_keviyot(const SweepOptions& opt = {});

/// The molad of every month falls no later than the first day of that
/// month.
VerificationReport verify_landau(const SweepOptions& opt = {});

/// Structural sanity: Rosh Hashanah never on Sunday/Wednesday/Friday,
/// postponement bounded by two days, stepped moladot agree with the
/// summation definition on a subsample, and date conversions round-trip on
/// the first and last day of every month in range.
VerificationReport verify_structure(const SweepOptions& opt = {});

/// Line format: one `property=<id> range=<start>..<end>` header, one
/// `year=<y> observed=<v> expected=<set>` line per counterexample, and a
/// `result=<pass|fail> checked=<n> elapsed_ms=<t>` trailer.
void write_report(std::ostream& os, const VerificationReport& report);

}  // namespace hcal
