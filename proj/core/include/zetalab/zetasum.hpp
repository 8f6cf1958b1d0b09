#pragma once

#include <cstddef>
#include <span>

#include "zetalab/complex_ops.hpp"
#include "zetalab/primes.hpp"
#include "zetalab/report.hpp"
#include "zetalab/series.hpp"

namespace zetalab {

/// Raw-term cap for the alternating-series evaluator.
inline constexpr std::size_t kEtaTermCap = 1'000'000;

/// sum_{k=1}^n k^-z, compensated, accumulated in order k = 1..n.
SeriesResult zeta_partial_sum(Complex z, std::size_t n);

/// zeta(z) = (1 - 2^{1-z})^{-1} sum (-1)^{k-1} k^{-z} for Re z > 0.
///
/// The alternating tail is accelerated by iterated averaging of consecutive
/// partial sums (Euler's transform). The start index doubles until the last
/// averaged difference, scaled by |1 - 2^{1-z}|^{-1}, drops below `tol` or the
/// raw-term cap is hit; meta["converged"] records which. truncation is the
/// number of raw terms used.
SeriesResult zeta_eta_regularized(Complex z, double tol = 1e-12);

/// prod_{k<=m} (1 - p_k^{-z})^{-1}, accumulated as a sum of principal logs
/// and exponentiated once. meta carries log_re / log_im.
SeriesResult euler_product_partial(Complex z, const PrimeTable& table, std::size_t m);

/// f_n(s,t) = prod_{k<=n} (1 - 2 p_k^{-s/2} cos(s t log p_k) + p_k^{-s}),
/// computed in log space. meta["log_f"] is the exact logarithm.
SeriesResult standard_form_f(double s, double t, const PrimeTable& table, std::size_t n);

/// Truncated expansion of log f_n in powers of
/// u_k = 2 p_k^{-s/2} cos(s t log p_k) - p_k^{-s}, up to u^order. Primes with
/// |u_k| >= 1 fall outside the series' domain and contribute their exact log;
/// their 1-based indices are listed in `indices`.
/// meta: exact_log_f, discrepancy, tail_bound (= sum |u|^{order+1}/((order+1)(1-|u|))).
SeriesResult log_f_expansion(double s, double t, const PrimeTable& table, std::size_t n, int order);

/// Product-form ratio f_n(s,t) / prod (1 + 1/p_k) as the value, with the
/// s = 1 summation counterpart in meta:
///   summation_ratio = [-2 sum (c_k/sqrt p_k)(c_k/sqrt p_k + 1) + sum 1/p_k] / sum 1/p_k
///   leading_term    = sum c_k / sqrt p_k, with c_k = cos(t log p_k)
/// The summation form is evaluated literally; it is not an algebraic
/// consequence of the product form.
SeriesResult regularized_ratio(double s, double t, const PrimeTable& table, std::size_t n);

/// Evaluation grid for cosine_superposition: t_i = t_min + i * step.
struct UniformGrid {
    double t_min = 0.0;
    double step = 0.01;
    std::size_t count = 0;

    double at(std::size_t i) const noexcept { return t_min + static_cast<double>(i) * step; }
    /// Points t_min, t_min + step, ... not exceeding t_max (+1e-9 step slack).
    static UniformGrid span(double t_min, double t_max, double step);
};

/// y_{n,alpha}(t) = -sum_{k<=n} cos(t log p_k) / p_k^alpha at each grid point.
/// Rows (t, y), in grid order, bitwise independent of `threads`.
ExperimentReport cosine_superposition(double alpha, const PrimeTable& table, std::size_t n,
                                      std::span<const double> grid, unsigned threads = 0);
/// Same values on a uniform grid, using a phase recurrence anchored exactly
/// every few points; agrees with the general overload to ~1e-13.
ExperimentReport cosine_superposition(double alpha, const PrimeTable& table, std::size_t n,
                                      const UniformGrid& grid, unsigned threads = 0);

/// y_{n,alpha}(t) at a single point.
double superposition_value(double alpha, const PrimeTable& table, std::size_t n, double t);

} // namespace zetalab
