#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abwalk/core/interval.hpp"
#include "abwalk/core/step_set.hpp"
#include "abwalk/core/word.hpp"
#include "abwalk/exceptional/schedule.hpp"

namespace abwalk {

/// Upper limit on constructed word length.
inline constexpr std::uint64_t kMaxConstructionLength = 100'000'000;

enum class CertificateKind { gdelta, cantor };

const char* to_string(CertificateKind kind) noexcept;

/// Hit frequency of `interval` over S_1..S_n.
struct CertificateRecord {
    std::uint64_t stage;
    std::uint64_t n;
    Interval interval;
    std::uint64_t hits;
    double frequency;
    double bound;           // n_k/(n_k + n_k^2) or tau/(1 + eps/2)
    std::uint64_t hit_limit;  // integer form: n_k, or floor(n_k/q) from pigeonhole
};

/// Positions first..last (1-based, inclusive) must avoid `target`.
struct ConstrainedBlock {
    std::uint64_t first;
    std::uint64_t last;
    Interval target;
};

struct ExceptionalCertificate {
    CertificateKind kind;
    std::vector<CertificateRecord> records;
    std::vector<ConstrainedBlock> blocks;
    std::vector<std::size_t> selected_cells;      // cantor only, per stage
    std::optional<std::size_t> most_selected_cell;  // cantor only
    std::size_t q = 0;                             // cantor only
};

struct Construction {
    Word word;
    ExceptionalCertificate certificate;
};

/// Free prefix of n1 sampled symbols, then for k = 1..stages a block of n_k^2
/// symbols avoiding (0, tau), with n_{k+1} = n_k + n_k^2. Stage k is certified
/// at N_k = n_k + n_k^2 with bound n_k/N_k.
/// Errors: precondition (gap condition), budget_exceeded past kMaxConstructionLength.
Construction gdelta_word(const StepSet& steps, double tau, std::uint64_t n1, std::size_t stages, std::uint64_t seed);

/// Supplies free symbol number i (1-based over the whole word).
using FreeSymbolSource = std::function<Word::Symbol(std::uint64_t position)>;

/// Stage k: free symbols up to n_k, then the least-hit cell of [0,1) split in
/// q is avoided for floor(eps n_k) steps. Certified at n~_k with bound
/// tau/(1 + eps/2), tau = 1/q.
/// Errors: precondition (eps n_1 <= 10, gap condition for 1/q, stages out of
/// range), budget_exceeded.
Construction cantor_word(const StepSet& steps, const CantorSchedule& schedule, std::size_t q, std::uint64_t seed,
                         std::size_t stages);
Construction cantor_word(const StepSet& steps, const CantorSchedule& schedule, std::size_t q, std::size_t stages,
                         const FreeSymbolSource& free_symbols);

struct CertificateCheck {
    bool ok;
    std::string failure;  // first problem found
};

/// Re-simulates the word from scratch, checks every constrained block and
/// recounts every record.
CertificateCheck verify_certificate(const Word& word, const StepSet& steps, const ExceptionalCertificate& certificate);

}  // namespace abwalk
