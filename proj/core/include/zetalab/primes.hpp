#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zetalab/series.hpp"

namespace zetalab {

/// Largest table the builder accepts unless the caller raises the budget.
inline constexpr std::size_t kDefaultPrimeBudget = 50'000'000;

/// Immutable table of the first m primes with compensated prefix aggregates.
/// Index k in the accessors is 1-based, matching p_1 = 2.
class PrimeTable {
public:
    std::size_t count() const noexcept { return primes_.size(); }

    std::uint64_t prime(std::size_t k) const { return primes_.at(k - 1); }
    std::span<const std::uint64_t> primes() const noexcept { return primes_; }
    /// log p_k for all k, precomputed once for the hot loops.
    std::span<const double> logs() const noexcept { return logs_; }

    /// Sum over the first m primes; m = 0 gives 0.
    double log_sum(std::size_t m) const { return prefix(log_prefix_, m); }
    double recip_sum(std::size_t m) const { return prefix(recip_prefix_, m); }
    double recip_sqrt_sum(std::size_t m) const { return prefix(recip_sqrt_prefix_, m); }

    double log_sum() const { return log_sum(count()); }
    double recip_sum() const { return recip_sum(count()); }
    double recip_sqrt_sum() const { return recip_sqrt_sum(count()); }

private:
    friend PrimeTable build_prime_table(std::size_t m, std::size_t budget);

    static double prefix(const std::vector<double>& v, std::size_t m);

    std::vector<std::uint64_t> primes_;
    std::vector<double> logs_;
    std::vector<double> log_prefix_;
    std::vector<double> recip_prefix_;
    std::vector<double> recip_sqrt_prefix_;
};

/// The first m primes. Throws ErrorKind::Capacity when m exceeds `budget`
/// and ErrorKind::Domain when m is zero.
PrimeTable build_prime_table(std::size_t m, std::size_t budget = kDefaultPrimeBudget);

/// Upper bound for the m-th prime used to size the sieve window.
std::uint64_t nth_prime_upper_bound(std::size_t m) noexcept;

/// Primes in [lo, hi) by a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> sieve_range(std::uint64_t lo, std::uint64_t hi);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/// prod_{k<=m} (1 - 1/p_k) with diagnostics
///   mertens_ratio  = product * log p_m   (tends to e^-gamma)
///   deviation      = mertens_ratio - e^-gamma
///   scale          = 1/sqrt(p_m)         (the deviation order)
///   log_value      = log of the product
SeriesResult mertens_product(const PrimeTable& table, std::size_t m);

/// prod_{k<=m} (1 + 1/p_k) with diagnostics log_value, loglog_pm, C
/// (= product / log p_m), bracket_lo = 6e^gamma/pi^2, bracket_hi = e^gamma and
/// bracket_position = (C - lo) / (hi - lo).
SeriesResult plus_product(const PrimeTable& table, std::size_t m);

/// S = sum_{k<=m} 1/sqrt(p_k) against the leading asymptotic 2 sqrt(m).
/// Diagnostics: leading, residual, residual_over_sqrt_m.
SeriesResult recip_sqrt_sum_asymptotic(const PrimeTable& table, std::size_t m);

} // namespace zetalab
