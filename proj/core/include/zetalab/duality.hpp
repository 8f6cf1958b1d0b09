#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zetalab/complex_ops.hpp"
#include "zetalab/primes.hpp"
#include "zetalab/series.hpp"
#include "zetalab/zeros.hpp"

namespace zetalab {

/// mu_j = lambda_j and nu_k = log p_k / (2 pi) with their product split
/// into Gauss bracket and fractional part.
struct NormalizedPair {
    double mu = 0.0;
    double nu = 0.0;
    double product = 0.0;
    double floor = 0.0;
    double frac = 0.0; ///< in [0, 1)
};

NormalizedPair normalize_pair(double lambda, double log_p);

/// nu_k = log p_k / (2 pi).
double nu(const PrimeTable& table, std::size_t k);

enum class Direction { K, J };

/// S = sum (mu nu - 1/2) - sum [mu nu] over k = 1..count with j fixed
/// (Direction::K) or over j = 1..count with k fixed (Direction::J).
/// value = S; meta: mean_frac, mean_centered (= S / count), sum_products, sum_floors.
SeriesResult frac_statistic(std::span<const ZeroRecord> zeros, const PrimeTable& table, Direction direction,
                            std::size_t fixed_index, std::size_t count);

/// Literal right-hand side
///   2 pi sum_{k<=m} [lambda_j log p_k / 2pi] / (m (log m - 1)) + pi / (log m - 1),
/// fed with the stored lambda_j. meta: estimate, truth, error, offset (= pi/(log m - 1)).
/// With bootstrap_iterations > 0 the estimate is fed back as lambda that many
/// times (an extension, not part of the literal relation; meta["bootstrap"]).
SeriesResult reconstruct_lambda(std::size_t j, std::span<const ZeroRecord> zeros, const PrimeTable& table,
                                std::size_t m, std::size_t bootstrap_iterations = 0);

/// Literal p_k ~ n^{2 sum_{j<=n} [lambda_j log p_k / 2pi] / n^2 + 1/n}.
/// meta: estimate, truth, relative_error, log_form (the log p_k estimate),
/// exponent.
SeriesResult reconstruct_prime(std::size_t k, std::span<const ZeroRecord> zeros, const PrimeTable& table,
                               std::size_t n);

/// Empirical distribution of angles against the density (2/pi) sin^2 on [0, pi].
struct DistributionReport {
    std::size_t sample_size = 0;
    std::vector<double> edges;      ///< bins + 1 edges, 0 .. pi
    std::vector<double> empirical;  ///< bin masses, sum to 1
    std::vector<double> reference;  ///< exact bin masses of the sin^2 density
    double sup_cdf = 0.0;           ///< Kolmogorov-Smirnov statistic against the exact CDF
    double l1_cdf = 0.0;            ///< integral of |F_emp - F_ref| sampled at bin edges
};

/// CDF of (2/pi) sin^2 theta: (theta - sin theta cos theta) / pi.
double sin2_cdf(double theta);

/// Histogram and distances for arbitrary angles, each reduced mod pi.
DistributionReport distribution_report(std::vector<double> angles, std::size_t bins);

/// theta = lambda_j log p_k / 2 mod pi over j <= j_count, k <= k_count.
DistributionReport sato_tate_histogram(std::span<const ZeroRecord> zeros, const PrimeTable& table,
                                       std::size_t j_count, std::size_t k_count, std::size_t bins,
                                       unsigned threads = 0);

enum class FunctionEquationVariant { WithHalf, WithoutHalf };

/// sum_{j<=M} sum_{k<=N} (mu_j nu_k - [mu_j nu_k] - 1/2), or without the 1/2.
/// value = raw double sum; meta: mean (per pair), pairs. Per-j partial sums
/// are merged in j order, so the result is independent of `threads`.
SeriesResult function_equation_residual(std::span<const ZeroRecord> zeros, const PrimeTable& table,
                                        std::size_t M, std::size_t N, FunctionEquationVariant variant,
                                        unsigned threads = 0);

/// f(z) = zeta(2z) / zeta(z). meta carries numerator and denominator.
/// Throws Pole at z = 1 or 2z = 1, Pole when |zeta(z)| < 1e-14.
SeriesResult quotient_zeta_f(Complex z, const ZetaEvaluator& evaluator = {});

/// Dirichlet lambda(n) = sum_{k>=0} (2k+1)^-n = (1 - 2^-n) zeta(n), n > 1.
/// value = odd-denominator series (direct terms plus an Euler-Maclaurin
/// tail, remainder < 1e-12); meta: product_form, difference, terms.
SeriesResult dirichlet_lambda(double n);

/// g_n(z) = prod_{k=1}^n zeta(2^k z) / zeta(2^{k-1} z), factor by factor;
/// meta carries the telescoped zeta(2^n z)/zeta(z) and their difference.
/// Throws Pole naming k when a factor hits a pole or zero; n <= 20.
SeriesResult g_n_product(Complex z, std::size_t n, const ZetaEvaluator& evaluator = {});

} // namespace zetalab
