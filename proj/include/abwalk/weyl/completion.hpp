#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "abwalk/core/orbit.hpp"
#include "abwalk/weyl/weyl_sum.hpp"

namespace abwalk {

enum class TransformMethod { fft, direct };

/// a_n = e(h S_n) for n = 1..n_terms.
std::vector<Complex> phase_sequence(const Orbit& orbit, std::int64_t h, std::uint64_t n_terms);

/// Twisted sums T_j = sum_{n=1}^{N} a_n e(jn/N) for j = 0..N-1, N = phases.size().
/// T is N-periodic in j, which covers every j in [-N, N].
std::vector<Complex> twisted_sums(std::span<const Complex> phases, TransformMethod method = TransformMethod::fft);

/// U = sum_{j=-N}^{N} |T_j| / (|j| + 1) from one period of T.
double completion_from_twisted(std::span<const Complex> twisted);

/// Completion sum U_{N,h} of the first N orbit positions. Throws range for
/// N == 0 or N past the orbit end.
double completion_sum(const Orbit& orbit, std::int64_t h, std::uint64_t n,
                      TransformMethod method = TransformMethod::fft);

/// |W_{M,h} - (1/N) sum_{j=1}^{N} (sum_{k=1}^{M} e(-jk/N)) T_j|, an exact
/// identity evaluated in floating point. Throws range unless 1 <= M <= N <= size.
double completion_identity_check(const Orbit& orbit, std::int64_t h, std::uint64_t m, std::uint64_t n);

/// The same reconstruction error for every M = 1..N in O(N^2) total.
std::vector<double> completion_identity_profile(const Orbit& orbit, std::int64_t h, std::uint64_t n);

/// sup over all orbits of U_{N,h}: 2N * sum_{j=0}^{N} 1/(j+1) bounds it from above.
double completion_upper_bound(std::uint64_t n);

}  // namespace abwalk
