#include "abwalk/io/serialize.hpp"

#include <cmath>
#include <sstream>

#include "abwalk/io/format.hpp"
#include "abwalk/weyl/moments.hpp"

namespace abwalk {
namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json steps_json(const StepSet& steps) {
    Json j = Json::array();
    for (double v : steps.values()) j.push_back(v);
    return j;
}

Json interval_json(const Interval& interval) {
    return Json{{"low", interval.a()},
                {"high", interval.b()},
                {"openness", interval.openness() == Openness::open ? "open" : "half-open"}};
}

std::string big(const BigInt& v) { return v.str(); }

std::string row(std::initializer_list<std::string> cells) {
    std::string out;
    for (const auto& c : cells) {
        if (!out.empty()) out += ',';
        out += c;
    }
    return out + '\n';
}

std::string num(double v) { return format_double(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }
std::string num(std::int64_t v) { return std::to_string(v); }

}  // namespace

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

Json orbit_json(const Orbit& orbit) {
    Json positions = Json::array();
    for (double p : orbit.positions()) positions.push_back(p);
    Json word = Json::array();
    for (auto s : orbit.word()) word.push_back(s);
    return Json{{"schema", "abwalk.orbit.v1"},
                {"steps", steps_json(orbit.steps())},
                {"length", orbit.size()},
                {"word", word},
                {"positions", positions}};
}

Json weyl_json(const StepSet& steps, const WeylSeries& series) {
    Json sums = Json::array();
    for (auto z : series.sums) sums.push_back(complex_json(z));
    return Json{{"schema", "abwalk.weyl.v1"},
                {"steps", steps_json(steps)},
                {"h", series.h},
                {"checkpoints", series.checkpoints},
                {"sums", sums},
                {"normalized", series.normalized}};
}

Json moment_json(const StepSet& steps, const MomentReport& report, std::optional<double> exhaustive) {
    const auto t = theta(steps, report.h);
    Json j{{"schema", "abwalk.moment.v1"},
           {"steps", steps_json(steps)},
           {"h", report.h},
           {"n", report.n},
           {"trials", report.trials},
           {"theta", complex_json(report.theta)},
           {"theta_case", t.kind == ThetaCase::contracting ? "contracting" : "unimodular"},
           {"closed_form", report.closed_form},
           {"sample_mean", report.sample_mean},
           {"standard_error", report.standard_error}};
    j["exhaustive"] = exhaustive ? Json(*exhaustive) : Json(nullptr);
    return j;
}

Json tail_json(const StepSet& steps, const TailReport& report) {
    return Json{{"schema", "abwalk.tail.v1"},
                {"steps", steps_json(steps)},
                {"h", report.h},
                {"n", report.n},
                {"trials", report.trials},
                {"epsilon", std::isnan(report.epsilon) ? Json(nullptr) : Json(report.epsilon)},
                {"threshold", report.threshold},
                {"exceedances", report.exceedances},
                {"probability", report.probability},
                {"ci95", Json::array({report.ci_low, report.ci_high})}};
}

Json discrepancy_json(const StepSet& steps, const DiscrepancyProfile& profile) {
    return Json{{"schema", "abwalk.discrepancy.v1"},
                {"steps", steps_json(steps)},
                {"checkpoints", profile.checkpoints},
                {"dstar", profile.dstar},
                {"verdict_hint", to_string(profile.verdict)}};
}

Json construction_json(const StepSet& steps, const Construction& construction, const CertificateCheck& check) {
    const auto& cert = construction.certificate;
    Json records = Json::array();
    for (const auto& r : cert.records) {
        records.push_back(Json{{"stage", r.stage},
                               {"N", r.n},
                               {"interval", interval_json(r.interval)},
                               {"hits", r.hits},
                               {"hit_frequency", r.frequency},
                               {"bound", r.bound},
                               {"hit_limit", r.hit_limit}});
    }
    Json blocks = Json::array();
    for (const auto& b : cert.blocks) {
        blocks.push_back(Json{{"first", b.first}, {"last", b.last}, {"target", interval_json(b.target)}});
    }
    Json word = Json::array();
    for (auto s : construction.word) word.push_back(s);
    Json j{{"schema", "abwalk.exceptional.v1"},
           {"kind", to_string(cert.kind)},
           {"steps", steps_json(steps)},
           {"word_length", construction.word.size()},
           {"word", word},
           {"records", records},
           {"constrained_blocks", blocks}};
    if (cert.kind == CertificateKind::cantor) {
        j["q"] = cert.q;
        j["selected_cells"] = cert.selected_cells;
        j["most_selected_cell"] = cert.most_selected_cell ? Json(*cert.most_selected_cell) : Json(nullptr);
    }
    j["verified"] = check.ok;
    if (!check.ok) j["verification_failure"] = check.failure;
    return j;
}

Json dimension_json(const CantorSchedule& schedule) {
    Json n = Json::array(), n_tilde = Json::array(), log2_q = Json::array(), estimates = Json::array();
    for (std::size_t k = 1; k <= schedule.size(); ++k) {
        n.push_back(big(schedule.n(k)));
        n_tilde.push_back(big(schedule.n_tilde(k)));
        log2_q.push_back(big(schedule.log2_q(k)));
        estimates.push_back(dimension_estimate(schedule, k));
    }
    Json j{{"schema", "abwalk.dimension.v1"},
           {"epsilon", schedule.epsilon()},
           {"n", n},
           {"n_tilde", n_tilde},
           {"log2_q", log2_q},
           {"estimates", estimates}};
    j["corollary_ratios"] = schedule.size() >= 2 ? Json(corollary_check(schedule)) : Json::array();
    j["limit_if_corollary_holds"] = 1.0 / (1.0 + schedule.epsilon());
    return j;
}

Json suite_json(const SuiteReport& report) {
    Json criteria = Json::array();
    for (const auto& r : report.results) {
        criteria.push_back(Json{{"id", r.id},
                                {"name", r.name},
                                {"measured", r.measured},
                                {"relation", r.relation},
                                {"threshold", r.threshold},
                                {"runtime_limit_seconds", r.runtime_limit_seconds},
                                {"pass", r.pass},
                                {"detail", r.detail}});
    }
    return Json{{"schema", "abwalk.verify.v1"},
                {"suite", report.suite},
                {"seed", report.seed},
                {"passed", report.passed()},
                {"criteria", criteria}};
}

std::string orbit_csv(const Orbit& orbit) {
    std::string out = "n,position\n";
    for (std::size_t n = 1; n <= orbit.size(); ++n) out += row({num(std::uint64_t{n}), num(orbit.at(n))});
    return out;
}

std::string weyl_csv(const WeylSeries& series) {
    std::string out = "N,re,im,abs_over_N\n";
    for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
        out += row({num(series.checkpoints[i]), num(series.sums[i].real()), num(series.sums[i].imag()),
                    num(series.normalized[i])});
    }
    return out;
}

std::string moment_csv(const MomentReport& report, std::optional<double> exhaustive) {
    return "n,h,trials,closed_form,sample_mean,standard_error,exhaustive\n" +
           row({num(report.n), num(report.h), num(report.trials), num(report.closed_form), num(report.sample_mean),
                num(report.standard_error), exhaustive ? num(*exhaustive) : std::string{}});
}

std::string tail_csv(const TailReport& report) {
    return "n,h,trials,epsilon,threshold,exceedances,probability,ci_low,ci_high\n" +
           row({num(report.n), num(report.h), num(report.trials), num(report.epsilon), num(report.threshold),
                num(report.exceedances), num(report.probability), num(report.ci_low), num(report.ci_high)});
}

std::string discrepancy_csv(const DiscrepancyProfile& profile) {
    std::string out = "N,dstar\n";
    for (std::size_t i = 0; i < profile.checkpoints.size(); ++i) {
        out += row({num(profile.checkpoints[i]), num(profile.dstar[i])});
    }
    return out;
}

std::string construction_csv(const Construction& construction) {
    std::string out = "stage,N,interval_low,interval_high,hits,hit_frequency,bound\n";
    for (const auto& r : construction.certificate.records) {
        out += row({num(r.stage), num(r.n), num(r.interval.a()), num(r.interval.b()), num(r.hits), num(r.frequency),
                    num(r.bound)});
    }
    return out;
}

std::string dimension_csv(const CantorSchedule& schedule) {
    std::string out = "k,n,n_tilde,log2_q,estimate,corollary_ratio\n";
    const auto ratios = schedule.size() >= 2 ? corollary_check(schedule) : std::vector<double>{};
    for (std::size_t k = 1; k <= schedule.size(); ++k) {
        out += row({num(std::uint64_t{k}), big(schedule.n(k)), big(schedule.n_tilde(k)), big(schedule.log2_q(k)),
                    num(dimension_estimate(schedule, k)), k <= ratios.size() ? num(ratios[k - 1]) : std::string{}});
    }
    return out;
}

std::string suite_csv(const SuiteReport& report) {
    std::string out = "id,measured,relation,threshold,runtime_limit_seconds,pass\n";
    for (const auto& r : report.results) {
        out += row({r.id, num(r.measured), r.relation, num(r.threshold), num(r.runtime_limit_seconds),
                    r.pass ? "true" : "false"});
    }
    return out;
}

}  // namespace abwalk
