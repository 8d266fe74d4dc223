#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace abwalk {

using BigInt = boost::multiprecision::cpp_int;

/// floor(epsilon * n) in exact arithmetic on the binary value of epsilon.
BigInt floor_scaled(double epsilon, const BigInt& n);

/// Block lengths of the Cantor scheme: free symbols up to n_k, then
/// floor(eps n_k) constrained ones, so stage k ends at n~_k = n_k + floor(eps n_k).
/// q_1 = 2^{n_1}, q_{k+1} = 2^{n_{k+1} - n~_k}.
///
/// Accepts epsilon in (0, 1] and requires n_1 >= 1, n_{k+1} > 2 n_k.
class CantorSchedule {
public:
    static CantorSchedule from_list(double epsilon, std::vector<BigInt> n);
    static CantorSchedule from_list(double epsilon, const std::vector<std::uint64_t>& n);
    /// n_{k+1} = n_k^2, `length` terms. n_1 >= 3 keeps n_k^2 > 2 n_k.
    static CantorSchedule squaring(double epsilon, const BigInt& n1, std::size_t length);
    /// n_k = base^k for k = 1..length, base >= 3.
    static CantorSchedule geometric(double epsilon, const BigInt& base, std::size_t length);

    double epsilon() const noexcept { return epsilon_; }
    std::size_t size() const noexcept { return n_.size(); }

    // All indices are 1-based and throw range past size().
    const BigInt& n(std::size_t k) const;
    const BigInt& constrained(std::size_t k) const;  // floor(eps n_k)
    BigInt n_tilde(std::size_t k) const;
    BigInt log2_q(std::size_t k) const;
    /// sum_{j<=k} log2 q_j, summed term by term.
    BigInt log2_q_partial_sum(std::size_t k) const;
    /// n_k - sum_{j<k} floor(eps n_j).
    BigInt telescoped_sum(std::size_t k) const;

private:
    CantorSchedule(double epsilon, std::vector<BigInt> n);
    void check_index(std::size_t k) const;

    double epsilon_;
    std::vector<BigInt> n_;
    std::vector<BigInt> floor_eps_;
};

/// (sum_{j<=k} log2 q_j) / n~_k, from the telescoped form. Always in [0, 1].
double dimension_estimate(const CantorSchedule& schedule, std::size_t k);

/// (sum_{j<=k} log2 q_j) / log2 q_{k+1} for k = 1..size-1. Needs size >= 2.
std::vector<double> corollary_check(const CantorSchedule& schedule);

/// Nearest double to num/den, den > 0.
double ratio_to_double(const BigInt& num, const BigInt& den);

}  // namespace abwalk
