#include "hcal/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "hcal/convert.hpp"
#include "hcal/molad.hpp"
#include "hcal/new_year.hpp"

namespace hcal {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
        .count();
}

std::string fmt(const Moment& m) {
    return "{" + std::to_string(m.day) + "," + std::to_string(m.hour) + "," +
           std::to_string(m.part) + "}";
}

/// One pass of the molad recurrence.  Holds the molad and Rosh Hashanah of
/// the current year and of its successor, so stepping and the current year
/// length are O(1); only construction pays for a summation molad.
class YearWalker {
public:
    explicit YearWalker(std::int64_t year)
        : year_(year),
          cur_(molad(year)),
          next_(molad_next(cur_, year)),
          rh_(rosh_hashanah_from_delayed(cur_ + six_hours, year)),
          rh_next_(rosh_hashanah_from_delayed(next_ + six_hours, year + 1)) {}

    void advance() {
        ++year_;
        cur_ = next_;
        rh_ = rh_next_;
        next_ = molad_next(cur_, year_);
        rh_next_ = rosh_hashanah_from_delayed(next_ + six_hours, year_ + 1);
    }

    const Moment& molad_of_year() const { return cur_; }
    std::int64_t rosh_hashanah_day() const { return rh_; }
    int length() const { return static_cast<int>(rh_next_ - rh_); }

private:
    std::int64_t year_;
    Moment cur_;
    Moment next_;
    std::int64_t rh_;
    std::int64_t rh_next_;
};

/// Per-chunk accumulator.  `failed` stays true even after the
/// counterexample list hits its cap, so a capped report still fails.
struct Partial {
    std::int64_t checked = 0;
    bool failed = false;
    std::vector<Counterexample> ces;
    std::uint64_t keviyah_mask = 0;
};

void record(Partial& p, std::size_t cap, std::int64_t year, std::string observed,
            std::string expected) {
    p.failed = true;
    if (p.ces.size() < cap) {
        p.ces.push_back({year, std::move(observed), std::move(expected)});
    }
}

/// Splits [start, end] into at most `jobs` contiguous inclusive chunks.
std::vector<std::pair<std::int64_t, std::int64_t>> split_range(std::int64_t start,
                                                               std::int64_t end,
                                                               int jobs) {
    const std::int64_t total = end - start + 1;
    const std::int64_t n = std::clamp<std::int64_t>(jobs, 1, total);
    std::vector<std::pair<std::int64_t, std::int64_t>> chunks;
    chunks.reserve(static_cast<std::size_t>(n));
    std::int64_t lo = start;
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t size = total / n + (i < total % n ? 1 : 0);
        chunks.emplace_back(lo, lo + size - 1);
        lo += size;
    }
    return chunks;
}

void check_range(const SweepOptions& opt) {
    if (opt.start < 1) {
        throw std::invalid_argument("sweep start must be >= 1");
    }
    if (opt.end < opt.start) {
        throw std::invalid_argument("sweep range is empty");
    }
}

/// Runs `worker(lo, hi, partial)` over the chunks of opt's range, on threads
/// when jobs > 1.  Each chunk starts from its own summation molad, so the
/// merged result cannot depend on the partitioning.
template <typename Worker>
std::vector<Partial> run_chunks(const SweepOptions& opt, Worker worker) {
    const auto chunks = split_range(opt.start, opt.end, opt.jobs);
    std::vector<Partial> partials(chunks.size());
    if (chunks.size() == 1) {
        worker(chunks[0].first, chunks[0].second, partials[0]);
        return partials;
    }
    std::vector<std::thread> threads;
    threads.reserve(chunks.size());
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        threads.emplace_back(
            [&, i] { worker(chunks[i].first, chunks[i].second, partials[i]); });
    }
    for (auto& t : threads) {
        t.join();
    }
    return partials;
}

/// Folds chunk results into `report` in chunk (= ascending year) order.
void merge_partials(VerificationReport& report, std::vector<Partial>& partials,
                    std::size_t cap) {
    bool failed = false;
    for (auto& p : partials) {
        report.years_checked += p.checked;
        failed = failed || p.failed;
        for (auto& ce : p.ces) {
            if (report.counterexamples.size() < cap) {
                report.counterexamples.push_back(std::move(ce));
            }
        }
    }
    report.passed = !failed;
}

VerificationReport make_report(std::string property, const SweepOptions& opt,
                               std::vector<Partial>& partials, Clock::time_point t0) {
    VerificationReport report;
    report.property_id = std::move(property);
    report.range_start = opt.start;
    report.range_end = opt.end;
    merge_partials(report, partials, opt.max_counterexamples);
    report.elapsed_ms = ms_since(t0);
    return report;
}

int length_index(int len) {
    switch (len) {
        case 353: return 0;
        case 354: return 1;
        case 355: return 2;
        case 383: return 3;
        case 384: return 4;
        case 385: return 5;
        default: return -1;
    }
}

constexpr int admissible_lengths[6] = {353, 354, 355, 383, 384, 385};

bool keviyah_admissible(int dow, int len) {
    switch (dow) {
        case 3: return len == 354 || len == 384;
        case 0:
        case 2: return len == 353 || len == 355 || len == 383 || len == 385;
        case 5: return len == 354 || len == 355 || len == 383 || len == 385;
        default: return false;
    }
}

const char* keviyah_length_set(int dow) {
    switch (dow) {
        case 3: return "{354,384}";
        case 0:
        case 2: return "{353,355,383,385}";
        case 5: return "{354,355,383,385}";
        default: return "{}";
    }
}

}  // namespace

VerificationReport verify_period_constants() {
    const auto t0 = Clock::now();
    VerificationReport report;
    report.property_id = "constants";
    report.range_start = 0;
    report.range_end = 0;
    auto check = [&](bool ok, std::string observed, std::string expected) {
        ++report.years_checked;
        if (!ok) {
            report.counterexamples.push_back(
                {0, std::move(observed), std::move(expected)});
        }
    };

    const std::int64_t lun = total_parts(lunation);
    check(lun == 765433, "lunation_parts=" + std::to_string(lun), "765433");

    const std::int64_t cycle = 235 * lun;
    check(cycle == PeriodConstants::cycle_parts,
          "cycle_parts=" + std::to_string(cycle),
          std::to_string(PeriodConstants::cycle_parts));

    check(parts_per_week == PeriodConstants::week_parts,
          "week_parts=" + std::to_string(parts_per_week),
          std::to_string(PeriodConstants::week_parts));

    const std::int64_t n = PeriodConstants::week_parts /
                           std::gcd(PeriodConstants::week_parts, cycle);
    check(n == PeriodConstants::n_cycles, "n_cycles=" + std::to_string(n),
          std::to_string(PeriodConstants::n_cycles));
    check(n * cycle % PeriodConstants::week_parts == 0,
          "period_parts%week=" + std::to_string(n * cycle % PeriodConstants::week_parts),
          "0");

    // minimality, by brute force: no smaller positive cycle count spans a
    // whole number of weeks
    std::int64_t least = n;
    for (std::int64_t d = 1; d < n; ++d) {
        if (d * cycle % PeriodConstants::week_parts == 0) {
            least = d;
            break;
        }
    }
    check(least == n, "least_cycles=" + std::to_string(least), std::to_string(n));

    check(19 * n == PeriodConstants::period_years,
          "period_years=" + std::to_string(19 * n),
          std::to_string(PeriodConstants::period_years));

    const std::int64_t total = n * cycle;
    check(total == 6527367685440, "period_parts=" + std::to_string(total),
          "6527367685440");
    check(total % parts_per_day == 0,
          "period_parts%day=" + std::to_string(total % parts_per_day), "0");
    check(total / parts_per_day == PeriodConstants::day_delta,
          "day_delta=" + std::to_string(total / parts_per_day),
          std::to_string(PeriodConstants::day_delta));
    check(PeriodConstants::day_delta % 7 == 0,
          "day_delta%7=" + std::to_string(PeriodConstants::day_delta % 7), "0");

    report.passed = report.counterexamples.empty();
    report.elapsed_ms = ms_since(t0);
    return report;
}

VerificationReport verify_periodicity(std::span<const std::int64_t> years, int jobs) {
    const auto t0 = Clock::now();
    if (years.empty()) {
        throw std::invalid_argument("periodicity sample is empty");
    }
    for (const auto y : years) {
        if (y < 1) {
            throw std::invalid_argument("sample years must be >= 1");
        }
    }
    VerificationReport report;
    report.property_id = "periodicity";
    const auto [mn, mx] = std::minmax_element(years.begin(), years.end());
    report.range_start = *mn;
    report.range_end = *mx;

    constexpr std::int64_t period = PeriodConstants::period_years;
    const std::size_t cap = SweepOptions{}.max_counterexamples;
    const Moment expected_delta{PeriodConstants::day_delta, 0, 0};
    const std::string expected_str = fmt(expected_delta);

    auto worker = [&](std::int64_t lo, std::int64_t hi, Partial& p) {
        for (std::int64_t i = lo; i <= hi; ++i) {
            const std::int64_t y = years[static_cast<std::size_t>(i)];
            // two summation moladot, neither derived from the other
            const Moment a = molad(y);
            const Moment b = molad(y + period);
            if (!(b - a == expected_delta)) {
                record(p, cap, y, "delta=" + fmt(b - a), expected_str);
            }
            if (day_of_week(b.day) != day_of_week(a.day)) {
                record(p, cap, y, "dow=" + std::to_string(day_of_week(b.day)),
                       std::to_string(day_of_week(a.day)));
            }
            if (is_leap(y) != is_leap(y + period)) {
                record(p, cap, y, std::string("leap=") + (is_leap(y + period) ? "1" : "0"),
                       is_leap(y) ? "1" : "0");
            }
            const std::int64_t rh1 = rosh_hashanah_from_delayed(a + six_hours, y);
            const std::int64_t len1 =
                rosh_hashanah_from_delayed(molad_next(a, y) + six_hours, y + 1) - rh1;
            const std::int64_t rh2 = rosh_hashanah_from_delayed(b + six_hours, y + period);
            const std::int64_t len2 =
                rosh_hashanah_from_delayed(molad_next(b, y + period) + six_hours,
                                           y + period + 1) -
                rh2;
            if (len1 != len2) {
                record(p, cap, y, "length=" + std::to_string(len2), std::to_string(len1));
            }
            ++p.checked;
        }
    };

    const auto chunks =
        split_range(0, static_cast<std::int64_t>(years.size()) - 1, jobs);
    std::vector<Partial> partials(chunks.size());
    if (chunks.size() == 1) {
        worker(chunks[0].first, chunks[0].second, partials[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(chunks.size());
        for (std::size_t i = 0; i < chunks.size(); ++i) {
            threads.emplace_back(
                [&, i] { worker(chunks[i].first, chunks[i].second, partials[i]); });
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    merge_partials(report, partials, cap);
    report.elapsed_ms = ms_since(t0);
    return report;
}

std::vector<std::int64_t> default_periodicity_sample() {
    std::vector<std::int64_t> years;
    years.reserve(2000);
    for (std::int64_t y = 1; y <= 1000; ++y) {
        years.push_back(y);
    }
    // mt19937_64 output is pinned by the standard, so a fixed seed gives the
    // same sample on every platform
    std::mt19937_64 rng(5782);
    for (int i = 0; i < 1000; ++i) {
        years.push_back(1 + static_cast<std::int64_t>(rng() % 1000000));
    }
    std::sort(years.begin(), years.end());
    return years;
}

VerificationReport verify_year_lengths(const SweepOptions& opt) {
    const auto t0 = Clock::now();
    check_range(opt);
    auto partials = run_chunks(opt, [&](std::int64_t lo, std::int64_t hi, Partial& p) {
        YearWalker w(lo);
        for (std::int64_t y = lo; y <= hi; ++y, w.advance()) {
            const int len = w.length();
            const bool leap = is_leap(y);
            const bool ok = leap ? len == 383 || len == 384 || len == 385
                                 : len == 353 || len == 354 || len == 355;
            if (!ok) {
                record(p, opt.max_counterexamples, y, std::to_string(len),
                       leap ? "{383,384,385}" : "{353,354,355}");
            }
            ++p.checked;
        }
    });
    return make_report("year-lengths", opt, partials, t0);
}

VerificationReport verify_keviyot(const SweepOptions& opt) {
    const auto t0 = Clock::now();
    check_range(opt);
    auto partials = run_chunks(opt, [&](std::int64_t lo, std::int64_t hi, Partial& p) {
        YearWalker w(lo);
        for (std::int64_t y = lo; y <= hi; ++y, w.advance()) {
            const int dow = day_of_week(w.rosh_hashanah_day());
            const int len = w.length();
            if (dow == 1 || dow == 4 || dow == 6) {
                record(p, opt.max_counterexamples, y, "dow=" + std::to_string(dow),
                       "{0,2,3,5}");
            } else if (!keviyah_admissible(dow, len)) {
                record(p, opt.max_counterexamples, y,
                       "dow=" + std::to_string(dow) + ",length=" + std::to_string(len),
                       keviyah_length_set(dow));
            }
            const int li = length_index(len);
            if (li >= 0) {
                p.keviyah_mask |= std::uint64_t{1} << (dow * 6 + li);
            }
            ++p.checked;
        }
    });

    std::uint64_t mask = 0;
    for (const auto& p : partials) {
        mask |= p.keviyah_mask;
    }
    auto report = make_report("keviyot", opt, partials, t0);
    const int distinct = std::popcount(mask);
    report.note = "distinct=" + std::to_string(distinct);
    // only a full period is guaranteed to realize every combination
    if (opt.end - opt.start + 1 >= PeriodConstants::period_years && distinct != 14) {
        report.passed = false;
        if (report.counterexamples.size() < opt.max_counterexamples) {
            report.counterexamples.push_back(
                {0, "distinct=" + std::to_string(distinct), "distinct=14"});
        }
        report.elapsed_ms = ms_since(t0);
    }
    return report;
}

VerificationReport verify_landau(const SweepOptions& opt) {
    const auto t0 = Clock::now();
    check_range(opt);

    // hoisted out of the sweep: the k-th lunation multiple, and the day
    // offset of each month's first day for every admissible year length
    Moment multiples[13];
    for (int k = 0; k < 13; ++k) {
        multiples[k] = k * lunation;
    }
    int offsets[6][14] = {};
    for (int li = 0; li < 6; ++li) {
        const int len = admissible_lengths[li];
        for (int m = 1; m <= (len >= 383 ? 13 : 12); ++m) {
            offsets[li][m] = days_preceding(m, len);
        }
    }

    auto partials = run_chunks(opt, [&](std::int64_t lo, std::int64_t hi, Partial& p) {
        YearWalker w(lo);
        for (std::int64_t y = lo; y <= hi; ++y, w.advance()) {
            const bool leap = is_leap(y);
            const int li = length_index(w.length());
            if (li < 0 || (admissible_lengths[li] >= 383) != leap) {
                record(p, opt.max_counterexamples, y,
                       "length=" + std::to_string(w.length()),
                       leap ? "{383,384,385}" : "{353,354,355}");
                ++p.checked;
                continue;
            }
            for (int m = 1; m <= (leap ? 13 : 12); ++m) {
                const std::int64_t molad_day =
                    (w.molad_of_year() + multiples[months_preceding(m, leap)]).day;
                const std::int64_t first_day = w.rosh_hashanah_day() + offsets[li][m];
                if (molad_day > first_day) {
                    record(p, opt.max_counterexamples, y,
                           "month=" + std::to_string(m) +
                               ",molad_day=" + std::to_string(molad_day),
                           "<=" + std::to_string(first_day));
                }
            }
            ++p.checked;
        }
    });
    return make_report("landau", opt, partials, t0);
}

VerificationReport verify_structure(const SweepOptions& opt) {
    const auto t0 = Clock::now();
    check_range(opt);
    // warm the conversion cache through the whole range up front, so
    // parallel chunks only ever take its shared lock
    to_absolute(HebrewDate{1, 1, opt.end});

    auto partials = run_chunks(opt, [&](std::int64_t lo, std::int64_t hi, Partial& p) {
        YearWalker w(lo);
        for (std::int64_t y = lo; y <= hi; ++y, w.advance()) {
            const std::int64_t rh = w.rosh_hashanah_day();
            const int dow = day_of_week(rh);
            if (dow == 1 || dow == 4 || dow == 6) {
                record(p, opt.max_counterexamples, y, "dow=" + std::to_string(dow),
                       "{0,2,3,5}");
            }
            const std::int64_t push = rh - (w.molad_of_year() + six_hours).day;
            if (push < 0 || push > 2) {
                record(p, opt.max_counterexamples, y,
                       "postponement=" + std::to_string(push), "{0,1,2}");
            }
            // also bounded relative to the undelayed molad's day
            const std::int64_t drift = rh - w.molad_of_year().day;
            if (drift < 0 || drift > 2) {
                record(p, opt.max_counterexamples, y,
                       "molad_to_rh=" + std::to_string(drift), "{0,1,2}");
            }
            if (y <= 10000 || y % 10000 == 0) {
                const Moment direct = molad(y);
                if (!(direct == w.molad_of_year())) {
                    record(p, opt.max_counterexamples, y,
                           "stepped=" + fmt(w.molad_of_year()), fmt(direct));
                }
            }

            // conversions must tile the year: each month starts where the
            // previous one ended and the last ends the day before next Rosh
            // Hashanah
            const int len = w.length();
            std::int64_t expect_first = rh;
            for (const int m : month_sequence(is_leap(y))) {
                const int ml = month_length(m, len);
                const HebrewDate first{1, m, y};
                const HebrewDate last{ml, m, y};
                const std::int64_t a1 = to_absolute(first);
                const std::int64_t a2 = to_absolute(last);
                if (a1 != expect_first) {
                    record(p, opt.max_counterexamples, y,
                           "first(" + std::to_string(m) + ")=" + std::to_string(a1),
                           std::to_string(expect_first));
                }
                if (a2 != a1 + ml - 1) {
                    record(p, opt.max_counterexamples, y,
                           "last(" + std::to_string(m) + ")=" + std::to_string(a2),
                           std::to_string(a1 + ml - 1));
                }
                if (!(to_hebrew(a1) == first)) {
                    record(p, opt.max_counterexamples, y, to_string(to_hebrew(a1)),
                           to_string(first));
                }
                if (!(to_hebrew(a2) == last)) {
                    record(p, opt.max_counterexamples, y, to_string(to_hebrew(a2)),
                           to_string(last));
                }
                expect_first = a2 + 1;
            }
            if (expect_first != rh + len) {
                record(p, opt.max_counterexamples, y,
                       "year_end=" + std::to_string(expect_first),
                       std::to_string(rh + len));
            }
            ++p.checked;
        }
    });
    return make_report("structure", opt, partials, t0);
}

void write_report(std::ostream& os, const VerificationReport& report) {
    os << "property=" << report.property_id << " range=" << report.range_start << ".."
       << report.range_end << '\n';
    for (const auto& ce : report.counterexamples) {
        os << "year=" << ce.year << " observed=" << ce.observed
           << " expected=" << ce.expected << '\n';
    }
    os << "result=" << (report.passed ? "pass" : "fail")
       << " checked=" << report.years_checked << " elapsed_ms=" << report.elapsed_ms
       << '\n';
}

}  // namespace hcal
