#include "abwalk/exceptional/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "abwalk/core/error.hpp"
#include "abwalk/core/orbit.hpp"
#include "abwalk/exceptional/avoidance.hpp"

namespace abwalk {
namespace {

std::uint64_t to_length(const BigInt& value, const char* what) {
    if (value > kMaxConstructionLength) {
        fail(Errc::budget_exceeded, std::string(what) + " exceeds the construction length budget of " +
                                        std::to_string(kMaxConstructionLength));
    }
    return value.convert_to<std::uint64_t>();
}

}  // namespace

const char* to_string(CertificateKind kind) noexcept {
    return kind == CertificateKind::gdelta ? "gdelta" : "cantor";
}

Construction gdelta_word(const StepSet& steps, double tau, std::uint64_t n1, std::size_t stages, std::uint64_t seed) {
    require(tau > 0.0 && tau < 1.0, Errc::invalid_argument, "tau must lie in (0, 1)");
    require(n1 >= 1, Errc::invalid_argument, "n1 must be positive");
    const Interval target = Interval::open(0.0, tau);
    require_gap_condition(steps, target);

    // n_{k+1} = n_k + n_k^2, the end of stage k.
    std::vector<std::uint64_t> n{to_length(n1, "n1")};
    for (std::size_t k = 0; k < stages; ++k) {
        const BigInt next = BigInt(n.back()) + BigInt(n.back()) * n.back();
        n.push_back(to_length(next, "gdelta word length"));
    }

    Construction out{sample_word(seed, n.front(), steps.size()), {CertificateKind::gdelta, {}, {}, {}, {}, 0}};
    TorusWalker walker(steps);
    std::vector<double> positions;
    positions.reserve(n.back());
    for (auto s : out.word) positions.push_back(walker.advance(s));

    for (std::size_t k = 0; k < stages; ++k) {
        const std::uint64_t nk = n[k];
        const std::uint64_t end = n[k + 1];
        extend_avoiding(out.word, walker, steps, target, end - nk, &positions);
        const std::uint64_t hits = hit_count(std::span<const double>(positions).first(end), target);
        const double frequency = static_cast<double>(hits) / static_cast<double>(end);
        out.certificate.blocks.push_back({nk + 1, end, target});
        out.certificate.records.push_back(
            {k + 1, end, target, hits, frequency, static_cast<double>(nk) / static_cast<double>(end), nk});
    }
    return out;
}

Construction cantor_word(const StepSet& steps, const CantorSchedule& schedule, std::size_t q, std::size_t stages,
                         const FreeSymbolSource& free_symbols) {
    require(q >= 2, Errc::invalid_argument, "q must be at least 2");
    require(stages >= 1 && stages <= schedule.size(), Errc::precondition,
            "stages must lie in 1.." + std::to_string(schedule.size()));
    const double epsilon = schedule.epsilon();
    require(epsilon * schedule.n(1).convert_to<double>() > 10.0, Errc::precondition,
            "cantor construction needs epsilon * n_1 > 10");
    require_gap_condition(steps, cell_interval(1, q));

    const std::uint64_t total = to_length(schedule.n_tilde(stages), "cantor word length");
    const double tau = 1.0 / static_cast<double>(q);
    const double bound = tau / (1.0 + epsilon / 2.0);

    Construction out{Word(steps.size()), {CertificateKind::cantor, {}, {}, {}, {}, q}};
    out.word.reserve(total);
    TorusWalker walker(steps);
    std::vector<std::uint64_t> cell_hits(q, 0);
    std::vector<std::uint64_t> times_selected(q, 0);
    std::size_t recorded = 0;  // positions already folded into cell_hits

    // Positions in walk order; cell counts are kept over the whole prefix.
    std::vector<double> positions;
    positions.reserve(total);

    for (std::size_t k = 1; k <= stages; ++k) {
        const std::uint64_t nk = schedule.n(k).convert_to<std::uint64_t>();
        const std::uint64_t constrained = schedule.constrained(k).convert_to<std::uint64_t>();

        while (out.word.size() < nk) {
            const auto s = free_symbols(out.word.size() + 1);
            require(s >= 1 && s <= steps.size(), Errc::invalid_word, "free symbol outside the alphabet");
            out.word.push_back(s);
            positions.push_back(walker.advance(s));
        }
        for (; recorded < positions.size(); ++recorded) ++cell_hits[cell_index(positions[recorded], q) - 1];

        const auto cell =
            static_cast<std::size_t>(std::min_element(cell_hits.begin(), cell_hits.end()) - cell_hits.begin()) + 1;
        const Interval target = cell_interval(cell, q);
        ++times_selected[cell - 1];
        out.certificate.selected_cells.push_back(cell);

        extend_avoiding(out.word, walker, steps, target, constrained, &positions);
        for (; recorded < positions.size(); ++recorded) ++cell_hits[cell_index(positions[recorded], q) - 1];

        const std::uint64_t end = nk + constrained;
        const std::uint64_t hits = cell_hits[cell - 1];
        if (constrained > 0) out.certificate.blocks.push_back({nk + 1, end, target});
        out.certificate.records.push_back({k, end, target, hits, static_cast<double>(hits) / static_cast<double>(end),
                                           bound, nk / q});
    }

    out.certificate.most_selected_cell =
        static_cast<std::size_t>(std::max_element(times_selected.begin(), times_selected.end()) -
                                 times_selected.begin()) + 1;
    return out;
}

Construction cantor_word(const StepSet& steps, const CantorSchedule& schedule, std::size_t q, std::uint64_t seed,
                         std::size_t stages) {
    WordSampler sampler(seed, steps.size());
    return cantor_word(steps, schedule, q, stages, [&sampler](std::uint64_t) { return sampler.next(); });
}

CertificateCheck verify_certificate(const Word& word, const StepSet& steps, const ExceptionalCertificate& certificate) {
    const Orbit orbit = make_orbit(word, steps);
    for (const auto& block : certificate.blocks) {
        if (block.first < 1 || block.last > orbit.size()) return {false, "constrained block outside the word"};
        for (std::uint64_t j = block.first; j <= block.last; ++j) {
            if (block.target.contains(orbit.at(j))) {
                return {false, "position " + std::to_string(j) + " lies in " + block.target.to_string()};
            }
        }
    }
    for (const auto& r : certificate.records) {
        const std::string where = "stage " + std::to_string(r.stage) + ": ";
        if (r.n < 1 || r.n > orbit.size()) return {false, where + "checkpoint outside the word"};
        const std::uint64_t hits = hit_count(orbit, r.interval, r.n);
        if (hits != r.hits) {
            return {false, where + "recount gives " + std::to_string(hits) + " hits, record says " +
                               std::to_string(r.hits)};
        }
        const double frequency = static_cast<double>(hits) / static_cast<double>(r.n);
        if (frequency != r.frequency) return {false, where + "recorded frequency does not match the recount"};
        if (hits > r.hit_limit) return {false, where + "hits exceed the integer limit"};
        if (!(frequency <= r.bound)) return {false, where + "frequency exceeds the certified bound"};
    }
    return {true, {}};
}

}  // namespace abwalk
