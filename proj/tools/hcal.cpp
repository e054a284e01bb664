// hcal — Hebrew-calendar conversions, moladot, year structure, and
// verification sweeps over the calendar's 689,472-year period.
//
// Exit status: 0 success, 1 verification failure, 2 usage or parse error,
// 3 domain error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hcal/convert.hpp"
#include "hcal/errors.hpp"
#include "hcal/molad.hpp"
#include "hcal/new_year.hpp"
#include "hcal/verify.hpp"

namespace {

using nlohmann::json;

std::int64_t absolute_of_literal(const std::string& text) {
    if (text.rfind("A:", 0) == 0) {
        std::int64_t a = 0;
        const char* first = text.data() + 2;
        const char* last = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(first, last, a);
        if (ec != std::errc() || ptr != last || first == last) {
            throw hcal::InvalidDate("cannot parse absolute-day literal: " + text);
        }
        return a;
    }
    if (text.rfind("H:", 0) == 0) {
        return hcal::to_absolute(hcal::parse_hebrew(text));
    }
    if (text.rfind("G:", 0) == 0) {
        return hcal::to_absolute(hcal::parse_gregorian(text));
    }
    throw hcal::InvalidDate("date literal must start with H:, G:, or A:  (got \"" +
                            text + "\")");
}

void check_year_argument(std::int64_t year) {
    if (year < 1) {
        throw hcal::InvalidDate("year must be >= 1, got " + std::to_string(year));
    }
    if (year > hcal::max_hebrew_year) {
        throw hcal::OutOfDomain("year " + std::to_string(year) +
                                " beyond supported maximum " +
                                std::to_string(hcal::max_hebrew_year));
    }
}

int run_convert(const std::string& target, const std::string& literal, bool as_json) {
    const std::int64_t a = absolute_of_literal(literal);
    if (as_json) {
        json j;
        j["absolute"] = a;
        j["gregorian"] = hcal::to_string(hcal::to_gregorian(a));
        try {
            j["hebrew"] = hcal::to_string(hcal::to_hebrew(a));
        } catch (const hcal::OutOfDomain&) {
            if (target == "hebrew") {
                throw;
            }
            j["hebrew"] = nullptr;
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    if (target == "absolute") {
        std::cout << a << '\n';
    } else if (target == "gregorian") {
        std::cout << hcal::to_string(hcal::to_gregorian(a)) << '\n';
    } else {
        std::cout << hcal::to_string(hcal::to_hebrew(a)) << '\n';
    }
    return 0;
}

int run_molad(std::int64_t year, int month, bool as_json) {
    check_year_argument(year);
    const hcal::Moment m =
        month == 0 ? hcal::molad(year) : hcal::monthly_molad(month, year);
    const int dow = hcal::day_of_week(m.day);
    if (as_json) {
        json j;
        j["year"] = year;
        if (month != 0) {
            j["month"] = month;
        }
        j["molad"] = {{"day", m.day}, {"hour", m.hour}, {"part", m.part}};
        j["day_of_week"] = hcal::day_name(dow);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "{" << m.day << ", " << m.hour << ", " << m.part << "} ("
              << hcal::day_name(dow) << ")\n";
    return 0;
}

int run_year_info(std::int64_t year, bool as_json) {
    check_year_argument(year);
    const hcal::Keviyah k = hcal::keviyah(year);
    const std::int64_t rh = hcal::rosh_hashanah(year);
    const hcal::Dechiyah d = hcal::applied_dechiyah(year);
    const std::string greg = hcal::to_string(hcal::to_gregorian(rh));
    if (as_json) {
        json j;
        j["year"] = year;
        j["leap"] = k.leap;
        j["rosh_hashanah"] = {{"absolute", rh},
                              {"gregorian", greg},
                              {"day_of_week", hcal::day_name(k.start_dow)}};
        j["length"] = k.length;
        j["class"] = hcal::to_string(k.cls);
        j["dechiyah"] = hcal::to_string(d);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "year=" << year << '\n'
              << "leap=" << (k.leap ? "true" : "false") << '\n'
              << "rosh_hashanah=" << rh << '\n'
              << "gregorian=" << greg << '\n'
              << "day_of_week=" << hcal::day_name(k.start_dow) << '\n'
              << "length=" << k.length << '\n'
              << "class=" << hcal::to_string(k.cls) << '\n'
              << "dechiyah=" << hcal::to_string(d) << '\n';
    return 0;
}

json report_json(const hcal::VerificationReport& r) {
    json j;
    j["property"] = r.property_id;
    j["range"] = {{"start", r.range_start}, {"end", r.range_end}};
    j["checked"] = r.years_checked;
    j["passed"] = r.passed;
    auto ces = json::array();
    for (const auto& ce : r.counterexamples) {
        ces.push_back(
            {{"year", ce.year}, {"observed", ce.observed}, {"expected", ce.expected}});
    }
    j["counterexamples"] = std::move(ces);
    j["elapsed_ms"] = r.elapsed_ms;
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    return j;
}

struct VerifyArgs {
    std::string suite;
    std::int64_t start = 1;
    std::int64_t end = hcal::PeriodConstants::period_years;
    bool explicit_range = false;
    int jobs = 1;
    bool as_json = false;
    std::string out_path;
};

std::vector<hcal::VerificationReport> run_suites(const VerifyArgs& args) {
    const hcal::SweepOptions opt{args.start, args.end, args.jobs, 100};
    const auto periodicity = [&] {
        if (args.explicit_range) {
            // explicit range: check exactly the requested years
            if (args.end - args.start + 1 > 1'000'000) {
                throw std::invalid_argument(
                    "periodicity range too large; each sampled year costs two "
                    "summation moladot (limit 1000000 years)");
            }
            std::vector<std::int64_t> years;
            years.reserve(static_cast<std::size_t>(args.end - args.start + 1));
            for (std::int64_t y = args.start; y <= args.end; ++y) {
                years.push_back(y);
            }
            return hcal::verify_periodicity(years, args.jobs);
        }
        const auto sample = hcal::default_periodicity_sample();
        return hcal::verify_periodicity(sample, args.jobs);
    };

    std::vector<hcal::VerificationReport> reports;
    if (args.suite == "constants" || args.suite == "all") {
        reports.push_back(hcal::verify_period_constants());
    }
    if (args.suite == "year-lengths" || args.suite == "all") {
        reports.push_back(hcal::verify_year_lengths(opt));
    }
    if (args.suite == "keviyot" || args.suite == "all") {
        reports.push_back(hcal::verify_keviyot(opt));
    }
    if (args.suite == "landau" || args.suite == "all") {
        reports.push_back(hcal::verify_landau(opt));
    }
    if (args.suite == "periodicity" || args.suite == "all") {
        reports.push_back(periodicity());
    }
    if (args.suite == "structure" || args.suite == "all") {
        reports.push_back(hcal::verify_structure(opt));
    }
    return reports;
}

int run_verify(const VerifyArgs& args) {
    std::ofstream file;
    if (!args.out_path.empty()) {
        file.open(args.out_path);
        if (!file) {
            std::cerr << "error: cannot open " << args.out_path << " for writing\n";
            return 2;
        }
    }
    std::ostream& os = args.out_path.empty() ? std::cout : file;

    const auto reports = run_suites(args);
    bool all_passed = true;
    if (args.as_json) {
        json j = json::array();
        for (const auto& r : reports) {
            j.push_back(report_json(r));
            all_passed = all_passed && r.passed;
        }
        os << (reports.size() == 1 ? j.front() : j).dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            hcal::write_report(os, r);
            all_passed = all_passed && r.passed;
        }
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact Hebrew-calendar arithmetic: conversions, moladot, year "
        "structure, and verification sweeps"};
    app.require_subcommand(1);

    const std::string literal_help =
        "date literal: H:YYYY-MM-DD (Hebrew), G:(+|-)YYYY-MM-DD (proleptic "
        "Gregorian, astronomical year), or A:<integer> (absolute day)";

    auto* convert = app.add_subcommand(
        "convert", "convert a date between Hebrew, Gregorian, and absolute day");
    std::string target;
    std::string literal;
    bool convert_json = false;
    convert->add_option("--to", target, "target calendar")
        ->required()
        ->check(CLI::IsMember({"hebrew", "gregorian", "absolute"}));
    convert->add_option("date", literal, literal_help)->required();
    convert->add_flag("--json", convert_json, "emit a structured record");

    auto* molad_cmd =
        app.add_subcommand("molad", "molad of a year's Tishri, or of one month");
    std::int64_t molad_year = 0;
    int molad_month = 0;
    bool molad_json = false;
    molad_cmd->add_option("year", molad_year, "Hebrew year (>= 1)")->required();
    molad_cmd->add_option("--month", molad_month,
                          "month code 1..12, or 13 for the leap month Adar I");
    molad_cmd->add_flag("--json", molad_json, "emit a structured record");

    auto* year_info =
        app.add_subcommand("year-info", "leap status, Rosh Hashanah, length, keviyah");
    std::int64_t info_year = 0;
    bool info_json = false;
    year_info->add_option("year", info_year, "Hebrew year (>= 1)")->required();
    year_info->add_flag("--json", info_json, "emit a structured record");

    auto* verify = app.add_subcommand("verify", "replay the calendar theorems");
    VerifyArgs vargs;
    verify
        ->add_option("suite", vargs.suite,
                     "one of: constants, periodicity, year-lengths, keviyot, "
                     "landau, structure, all")
        ->required()
        ->check(CLI::IsMember({"constants", "periodicity", "year-lengths", "keviyot",
                               "landau", "structure", "all"}));
    auto* start_opt =
        verify->add_option("--start", vargs.start, "first year (default 1)");
    auto* end_opt = verify->add_option(
        "--end", vargs.end, "last year (default 689472, one full period)");
    verify->add_option("--jobs", vargs.jobs, "worker threads (default 1)")
        ->check(CLI::Range(1, 1024));
    verify->add_option("--out", vargs.out_path, "write the report here instead of stdout");
    verify->add_flag("--json", vargs.as_json, "emit structured reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*convert) {
            return run_convert(target, literal, convert_json);
        }
        if (*molad_cmd) {
            return run_molad(molad_year, molad_month, molad_json);
        }
        if (*year_info) {
            return run_year_info(info_year, info_json);
        }
        vargs.explicit_range = start_opt->count() > 0 || end_opt->count() > 0;
        return run_verify(vargs);
    } catch (const hcal::OutOfDomain& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const hcal::CalendarError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
