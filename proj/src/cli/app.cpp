#include "abwalk/cli/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abwalk/core/error.hpp"
#include "abwalk/core/orbit.hpp"
#include "abwalk/core/step_set.hpp"
#include "abwalk/core/word.hpp"
#include "abwalk/equidist/discrepancy.hpp"
#include "abwalk/exceptional/constructions.hpp"
#include "abwalk/exceptional/schedule.hpp"
#include "abwalk/io/serialize.hpp"
#include "abwalk/verify/suite.hpp"
#include "abwalk/weyl/moments.hpp"
#include "abwalk/weyl/monte_carlo.hpp"
#include "abwalk/weyl/weyl_sum.hpp"

namespace abwalk {
namespace {

constexpr const char* kOutputDirVariable = "ABWALK_OUTPUT_DIR";

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    std::string output;
    std::size_t threads = 0;
    std::string steps;
    std::string word;
    std::uint64_t length = 0;
    std::uint64_t seed = 1;
    std::int64_t h = 1;
    std::uint64_t n = 0;
    std::uint64_t trials = 1000;
    double epsilon = 0.0;
    double tau = 0.0;
    std::size_t q = 10;
    std::string schedule;
    std::string checkpoints;
    std::string kind;
    std::uint64_t n1 = 0;
    std::size_t stages = 0;
    std::size_t terms = 6;
    std::string base = "4";
    std::string suite;
    bool exhaustive = false;
    double consistent_threshold = VerdictConfig{}.consistent_threshold;
    double inconsistent_floor = VerdictConfig{}.inconsistent_floor;
    std::uint64_t large_n = VerdictConfig{}.large_n;
};

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    for (std::string item; std::getline(stream, item, ',');) out.push_back(item);
    return out;
}

std::uint64_t parse_count(const std::string& token, const std::string& what) {
    require(!token.empty() && token.find_first_not_of("0123456789") == std::string::npos, Errc::invalid_argument,
            what + ": '" + token + "' is not a non-negative integer");
    try {
        return std::stoull(token);
    } catch (const std::exception&) {
        fail(Errc::invalid_argument, what + ": '" + token + "' does not fit in 64 bits");
    }
}

std::vector<std::uint64_t> parse_counts(const std::string& text, const std::string& what) {
    std::vector<std::uint64_t> out;
    for (const auto& t : split(text)) out.push_back(parse_count(t, what));
    require(!out.empty(), Errc::invalid_argument, what + " is empty");
    return out;
}

BigInt parse_big(const std::string& token, const std::string& what) {
    require(!token.empty() && token.size() < 4000 && token.find_first_not_of("0123456789") == std::string::npos,
            Errc::invalid_argument, what + ": '" + token + "' is not a non-negative integer");
    return BigInt(token);
}

bool given(const CLI::App& cmd, const std::string& name) {
    const CLI::Option* opt = cmd.get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

// The word comes either from --word or from --length/--seed.
Word input_word(const CLI::App& cmd, const Options& o, const StepSet& steps) {
    const bool explicit_word = given(cmd, "--word");
    const bool sampled = given(cmd, "--length");
    require(explicit_word != sampled, Errc::invalid_argument, "give exactly one of --word or --length");
    if (explicit_word) return Word::parse(o.word, steps.size());
    require(o.length >= 1, Errc::invalid_argument, "--length must be positive");
    return sample_word(o.seed, o.length, steps.size());
}

std::vector<std::uint64_t> input_checkpoints(const CLI::App& cmd, const Options& o, std::uint64_t length) {
    if (!given(cmd, "--checkpoints")) {
        auto cps = dyadic_checkpoints(length);
        if (cps.back() != length) cps.push_back(length);
        return cps;
    }
    return parse_counts(o.checkpoints, "--checkpoints");
}

void reject_unless(const CLI::App& cmd, bool allowed, std::initializer_list<const char*> names, const std::string& why) {
    if (allowed) return;
    for (const char* name : names) {
        require(!given(cmd, name), Errc::invalid_argument, std::string(name) + " is not used " + why);
    }
}

CantorSchedule input_schedule(const CLI::App& cmd, const Options& o) {
    require(given(cmd, "--schedule"), Errc::invalid_argument, "--schedule is required");
    if (o.schedule == "square") {
        require(given(cmd, "--n1"), Errc::invalid_argument, "--schedule square needs --n1");
        reject_unless(cmd, false, {"--base"}, "with --schedule square");
        return CantorSchedule::squaring(o.epsilon, o.n1, o.terms);
    }
    if (o.schedule == "geometric") {
        reject_unless(cmd, false, {"--n1"}, "with --schedule geometric");
        return CantorSchedule::geometric(o.epsilon, parse_big(o.base, "--base"), o.terms);
    }
    reject_unless(cmd, false, {"--n1", "--base", "--terms"}, "with an explicit --schedule list");
    std::vector<BigInt> n;
    for (const auto& t : split(o.schedule)) n.push_back(parse_big(t, "--schedule"));
    return CantorSchedule::from_list(o.epsilon, std::move(n));
}

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirVariable); dir && *dir) p = std::filesystem::path(dir) / p;
    }
    return p;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    const auto path = resolve_output(o.output);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file " + path.string());
    file << text;
    file.close();
    if (!file) throw IoError("failed writing output file " + path.string());
}

void emit(const Options& o, std::ostream& out, const Json& json, const std::string& csv) {
    emit(o, out, o.format == "csv" ? csv : dump(json));
}

int exit_code_for(const Error& e) {
    switch (e.category()) {
    case ErrorCategory::infeasible: return kExitInfeasible;
    case ErrorCategory::budget: return kExitBudget;
    case ErrorCategory::validation: return kExitValidation;
    }
    return kExitValidation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Random alpha-beta orbits on the circle: Weyl sums, discrepancy and exceptional words", "abwalk"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--output", o.output,
                        std::string("write here instead of stdout; relative paths resolve against $") +
                            kOutputDirVariable);
    };
    auto add_steps = [&](CLI::App* cmd) {
        cmd->add_option("--steps", o.steps, "comma list: decimals, p/q fractions, sqrt2m1, sqrt3m1, golden")
            ->required();
    };
    auto add_word_source = [&](CLI::App* cmd) {
        cmd->add_option("--word", o.word, "digit string over 1..l");
        cmd->add_option("--length", o.length, "sample a uniform word of this length");
        cmd->add_option("--seed", o.seed, "sampling seed");
    };

    auto* orbit = app.add_subcommand("orbit", "positions S_1..S_N of a word");
    add_steps(orbit);
    add_word_source(orbit);
    add_format(orbit);

    auto* weyl = app.add_subcommand("weyl", "partial Weyl sums W_{N,h}");
    add_steps(weyl);
    add_word_source(weyl);
    weyl->add_option("--h", o.h, "frequency, nonzero");
    weyl->add_option("--checkpoints", o.checkpoints, "comma list of N (default: powers of two and the length)");
    add_format(weyl);

    auto* moment = app.add_subcommand("moment", "E|W_{N,h}|^2: closed form and Monte Carlo");
    add_steps(moment);
    moment->add_option("--h", o.h, "frequency, nonzero");
    moment->add_option("--n", o.n, "N")->required();
    moment->add_option("--trials", o.trials, "sampled words");
    moment->add_option("--seed", o.seed, "Monte Carlo seed");
    moment->add_option("--threads", o.threads, "worker threads, 0 = all cores");
    moment->add_flag("--exhaustive", o.exhaustive, "also average over all l^N words (small N only)");
    add_format(moment);

    auto* tail = app.add_subcommand("tail", "P(U_{N,h} >= sqrt(N) (ln N)^{3/2+eps})");
    add_steps(tail);
    tail->add_option("--h", o.h, "frequency, nonzero");
    tail->add_option("--n", o.n, "N")->required();
    tail->add_option("--eps", o.epsilon, "epsilon > 0")->required();
    tail->add_option("--trials", o.trials, "sampled words");
    tail->add_option("--seed", o.seed, "Monte Carlo seed");
    tail->add_option("--threads", o.threads, "worker threads, 0 = all cores");
    add_format(tail);

    auto* disc = app.add_subcommand("discrepancy", "star discrepancy profile and verdict hint");
    add_steps(disc);
    add_word_source(disc);
    disc->add_option("--checkpoints", o.checkpoints, "comma list of N (default: powers of two and the length)");
    disc->add_option("--consistent-threshold", o.consistent_threshold, "verdict threshold");
    disc->add_option("--inconsistent-floor", o.inconsistent_floor, "verdict floor");
    disc->add_option("--large-n", o.large_n, "smallest judged checkpoint");
    add_format(disc);

    auto* exc = app.add_subcommand("exceptional", "construct a certified non-u.d. word");
    add_steps(exc);
    exc->add_option("--kind", o.kind, "gdelta or cantor")->required()->check(CLI::IsMember({"gdelta", "cantor"}));
    exc->add_option("--seed", o.seed, "seed for the free blocks");
    exc->add_option("--tau", o.tau, "gdelta: avoided interval (0, tau)");
    exc->add_option("--n1", o.n1, "gdelta: free prefix length");
    exc->add_option("--stages", o.stages, "number of stages");
    exc->add_option("--eps", o.epsilon, "cantor: epsilon in (0, 1]");
    exc->add_option("--schedule", o.schedule, "cantor: comma list n_1,n_2,...");
    exc->add_option("--q", o.q, "cantor: number of cells");
    add_format(exc);

    auto* dim = app.add_subcommand("dimension", "partial dimension estimates of a Cantor schedule");
    dim->add_option("--eps", o.epsilon, "epsilon in (0, 1]")->required();
    dim->add_option("--schedule", o.schedule, "comma list n_1,n_2,..., or square, or geometric")->required();
    dim->add_option("--n1", o.n1, "square: first term");
    dim->add_option("--base", o.base, "geometric: n_k = base^k");
    dim->add_option("--terms", o.terms, "square/geometric: number of terms");
    add_format(dim);

    auto* verify = app.add_subcommand("verify", "run a named check suite");
    verify->add_option("--suite", o.suite, "acceptance, oracles or smoke")->required();
    verify->add_option("--seed", o.seed, "suite seed");
    verify->add_option("--threads", o.threads, "worker threads, 0 = all cores");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "abwalk: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (orbit->parsed()) {
            const StepSet steps = StepSet::parse(o.steps);
            const Orbit result = make_orbit(input_word(*orbit, o, steps), steps);
            emit(o, out, orbit_json(result), orbit_csv(result));
        } else if (weyl->parsed()) {
            const StepSet steps = StepSet::parse(o.steps);
            const Orbit result = make_orbit(input_word(*weyl, o, steps), steps);
            require(result.size() >= 1, Errc::invalid_word, "empty word");
            const auto series = weyl_sum(result, o.h, input_checkpoints(*weyl, o, result.size()));
            emit(o, out, weyl_json(steps, series), weyl_csv(series));
        } else if (moment->parsed()) {
            const StepSet steps = StepSet::parse(o.steps);
            std::optional<double> exhaustive;
            if (o.exhaustive) {
                require(o.n <= 64, Errc::budget_exceeded, "--exhaustive enumeration is limited to 2^22 words");
                exhaustive = exhaustive_sq_moment(steps, o.h, static_cast<unsigned>(o.n));
            }
            const auto report = mc_second_moment(steps, o.h, o.n, o.trials, o.seed, o.threads);
            emit(o, out, moment_json(steps, report, exhaustive), moment_csv(report, exhaustive));
        } else if (tail->parsed()) {
            const StepSet steps = StepSet::parse(o.steps);
            const auto report = mc_tail_probability(steps, o.h, o.n, o.epsilon, o.trials, o.seed, o.threads);
            emit(o, out, tail_json(steps, report), tail_csv(report));
        } else if (disc->parsed()) {
            const StepSet steps = StepSet::parse(o.steps);
            const Orbit result = make_orbit(input_word(*disc, o, steps), steps);
            require(result.size() >= 1, Errc::invalid_word, "empty word");
            const VerdictConfig config{o.consistent_threshold, o.inconsistent_floor, o.large_n};
            const auto profile = ud_profile(result, input_checkpoints(*disc, o, result.size()), config);
            emit(o, out, discrepancy_json(steps, profile), discrepancy_csv(profile));
        } else if (exc->parsed()) {
            const StepSet steps = StepSet::parse(o.steps);
            const bool gdelta = o.kind == "gdelta";
            reject_unless(*exc, gdelta, {"--tau", "--n1"}, "by --kind cantor");
            reject_unless(*exc, !gdelta, {"--eps", "--schedule", "--q"}, "by --kind gdelta");
            Construction built = [&] {
                if (gdelta) {
                    require(given(*exc, "--tau") && given(*exc, "--n1") && given(*exc, "--stages"),
                            Errc::invalid_argument, "--kind gdelta needs --tau, --n1 and --stages");
                    return gdelta_word(steps, o.tau, o.n1, o.stages, o.seed);
                }
                require(given(*exc, "--eps"), Errc::invalid_argument, "--kind cantor needs --eps");
                const auto schedule = input_schedule(*exc, o);
                const std::size_t stages = given(*exc, "--stages") ? o.stages : schedule.size();
                return cantor_word(steps, schedule, o.q, o.seed, stages);
            }();
            const auto check = verify_certificate(built.word, steps, built.certificate);
            emit(o, out, construction_json(steps, built, check), construction_csv(built));
            if (!check.ok) {
                err << "abwalk: certificate failed verification: " << check.failure << "\n";
                return kExitVerifyFailed;
            }
        } else if (dim->parsed()) {
            const auto schedule = input_schedule(*dim, o);
            emit(o, out, dimension_json(schedule), dimension_csv(schedule));
        } else if (verify->parsed()) {
            // Timed progress lines go to stderr; the report itself carries no timings.
            const auto report = run_suite(o.suite, o.seed, o.threads,
                                          [&](const CriterionResult& r) { err << format_result_line(r) << "\n"; });
            emit(o, out, suite_json(report), suite_csv(report));
            return report.passed() ? kExitOk : kExitVerifyFailed;
        }
    } catch (const IoError& e) {
        err << "abwalk: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "abwalk: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kExitOk;
}

}  // namespace abwalk
