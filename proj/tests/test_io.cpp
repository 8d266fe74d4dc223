#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>

#include "abwalk/core/orbit.hpp"
#include "abwalk/core/rng.hpp"
#include "abwalk/io/format.hpp"
#include "abwalk/io/serialize.hpp"

using namespace abwalk;

namespace {

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

}  // namespace

TEST_CASE("format_double") {
    CHECK(format_double(0.0) == "0.0");
    CHECK(format_double(3.0) == "3.0");
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(-0.75) == "-0.75");
    CHECK(format_double(1e20) == "1e+20");
    CHECK(format_double(std::nan("")) == "nan");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");

    Xoshiro256ss rng(20);
    for (int i = 0; i < 10'000; ++i) {
        const double x = std::ldexp(rng.uniform01() - 0.5, static_cast<int>(rng.below(200)) - 100);
        CHECK(std::stod(format_double(x)) == x);
    }
}

TEST_CASE("orbit serialization") {
    const Orbit orbit = make_orbit(Word::parse("1212", 2), StepSet::from_values({0.25, 0.5}));
    CHECK(orbit_csv(orbit) == "n,position\n1,0.25\n2,0.75\n3,0.0\n4,0.5\n");
    const Json j = orbit_json(orbit);
    CHECK(j["schema"] == "abwalk.orbit.v1");
    CHECK(j["length"] == 4);
    CHECK(j["word"] == Json::array({1, 2, 1, 2}));
    CHECK(j["positions"][2] == 0.0);
    const std::string text = dump(j);
    CHECK(text.back() == '\n');
    CHECK(text.rfind("{\n  \"schema\": \"abwalk.orbit.v1\"", 0) == 0);
    CHECK(Json::parse(text) == j);
}

TEST_CASE("weyl and discrepancy serialization") {
    const Orbit orbit = make_orbit(sample_word(1, 64, 2), StepSet::from_values({0.25, 0.5}));
    const std::vector<std::uint64_t> cps{4, 64};
    const auto series = weyl_sum(orbit, 1, cps);
    const Json j = weyl_json(orbit.steps(), series);
    CHECK(j["schema"] == "abwalk.weyl.v1");
    CHECK(j["sums"].size() == 2);
    CHECK(j["sums"][0].size() == 2);
    CHECK(first_line(weyl_csv(series)) == "N,re,im,abs_over_N");

    const auto profile = ud_profile(orbit, cps);
    const Json d = discrepancy_json(orbit.steps(), profile);
    CHECK(d["verdict_hint"] == "inconclusive");
    CHECK(d["dstar"].size() == 2);
    CHECK(first_line(discrepancy_csv(profile)) == "N,dstar");
}

TEST_CASE("moment and tail serialization") {
    const StepSet steps = StepSet::from_values({0.25, 0.5});
    const auto m = mc_second_moment(steps, 1, 8, 50, 1, 1);
    const Json j = moment_json(steps, m, std::nullopt);
    CHECK(j["schema"] == "abwalk.moment.v1");
    CHECK(j["exhaustive"].is_null());
    CHECK(j["theta_case"] == "contracting");
    CHECK(moment_json(steps, m, 2.5)["exhaustive"] == 2.5);
    CHECK(first_line(moment_csv(m, std::nullopt)) == "n,h,trials,closed_form,sample_mean,standard_error,exhaustive");

    const auto t = mc_tail_probability(steps, 1, 64, 0.1, 50, 1, 1);
    const Json tj = tail_json(steps, t);
    CHECK(tj["schema"] == "abwalk.tail.v1");
    CHECK(tj["ci95"].size() == 2);
    CHECK(tj["epsilon"] == 0.1);
    CHECK(first_line(tail_csv(t)) == "n,h,trials,epsilon,threshold,exceedances,probability,ci_low,ci_high");
}

TEST_CASE("exceptional and dimension serialization") {
    const StepSet steps = StepSet::from_values({constants::sqrt2m1, constants::sqrt3m1});
    const auto schedule = CantorSchedule::from_list(1.0, std::vector<std::uint64_t>{16, 64});
    const auto c = cantor_word(steps, schedule, 10, 1, 2);
    const auto check = verify_certificate(c.word, steps, c.certificate);
    const Json j = construction_json(steps, c, check);
    CHECK(j["schema"] == "abwalk.exceptional.v1");
    CHECK(j["kind"] == "cantor");
    CHECK(j["records"].size() == 2);
    CHECK(j["records"][0]["interval"]["openness"] == "half-open");
    CHECK(j["verified"] == true);
    CHECK_FALSE(j.contains("verification_failure"));
    const Json failed = construction_json(steps, c, CertificateCheck{false, "tampered"});
    CHECK(failed["verification_failure"] == "tampered");
    const std::string csv = construction_csv(c);
    CHECK(first_line(csv) == "stage,N,interval_low,interval_high,hits,hit_frequency,bound");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

    const auto g = gdelta_word(steps, 0.1, 4, 1, 1);
    const Json gj = construction_json(steps, g, verify_certificate(g.word, steps, g.certificate));
    CHECK(gj["kind"] == "gdelta");
    CHECK_FALSE(gj.contains("q"));
    CHECK(gj["records"][0]["interval"]["openness"] == "open");

    const auto sq = CantorSchedule::squaring(1.0, 8, 6);
    const Json dj = dimension_json(sq);
    CHECK(dj["schema"] == "abwalk.dimension.v1");
    CHECK(dj["n"][5] == "79228162514264337593543950336");
    CHECK(dj["corollary_ratios"].size() == 5);
    CHECK(dj["limit_if_corollary_holds"] == 0.5);
    CHECK(dimension_csv(CantorSchedule::from_list(1.0, std::vector<std::uint64_t>{8, 64, 4096})) ==
          "k,n,n_tilde,log2_q,estimate,corollary_ratio\n"
          "1,8,16,8,0.5,0.16666666666666666\n"
          "2,64,128,48,0.4375,0.014112903225806451\n"
          "3,4096,8192,3968,0.4912109375,\n");
}

TEST_CASE("suite serialization") {
    SuiteReport report{"smoke", 7, {}};
    CriterionResult r;
    r.id = "S1";
    r.name = "example";
    r.measured = 0.5;
    r.threshold = 1.0;
    r.relation = "<=";
    r.value_ok = true;
    r.runtime_seconds = 0.25;
    r.runtime_limit_seconds = 1.0;
    r.pass = true;
    report.results.push_back(r);
    const Json j = suite_json(report);
    CHECK(j["schema"] == "abwalk.verify.v1");
    CHECK(j["passed"] == true);
    CHECK_FALSE(j["criteria"][0].contains("runtime_seconds"));
    CHECK(suite_csv(report) == "id,measured,relation,threshold,runtime_limit_seconds,pass\nS1,0.5,<=,1.0,1.0,true\n");
}
