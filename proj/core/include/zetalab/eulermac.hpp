#pragma once

#include <cstddef>
#include <vector>

#include "zetalab/complex_ops.hpp"
#include "zetalab/series.hpp"

namespace zetalab {

/// Largest k_max accepted by bernoulli_numbers.
inline constexpr int kMaxBernoulliPairs = 60;

/// Even-index Bernoulli numbers B_2 .. B_{2 k_max}, correctly rounded from
/// exact rational values.
class BernoulliTable {
public:
    int k_max() const noexcept { return static_cast<int>(b2j_.size()); }
    /// B_{2j}, 1 <= j <= k_max.
    double b2j(int j) const { return b2j_.at(static_cast<std::size_t>(j - 1)); }
    /// B_{2j} / (2j)!.
    double b2j_over_factorial(int j) const { return scaled_.at(static_cast<std::size_t>(j - 1)); }

private:
    friend BernoulliTable bernoulli_numbers(int k_max);
    std::vector<double> b2j_;
    std::vector<double> scaled_;
};

/// Throws ErrorKind::Capacity for k_max > kMaxBernoulliPairs, Domain for k_max < 1.
BernoulliTable bernoulli_numbers(int k_max);

/// B_n for 0 <= n <= 2*kMaxBernoulliPairs + 1 (B_1 = -1/2).
double bernoulli_number(int n);

/// B_order(x - floor(x)). Throws Capacity above order 2*kMaxBernoulliPairs + 1.
double periodized_bernoulli(double x, int order);

/// Split point M and number of correction pairs k.
struct EMConfig {
    int M = 16;
    int k = 10;
};

/// Starting configuration from the convergence condition M > |t|/(2 pi):
/// M = max(ceil(|t|/2pi) + 10, 16), k = 10.
EMConfig base_em_config(Complex z) noexcept;

/// base_em_config, with M then grown until the truncation bound is below
/// `target` (absolute).
EMConfig choose_em_config(Complex z, double target = 1e-14);

/// A-priori truncation bound
///   pi^2/3 |(z+2k+1)/(2k+3/2)| |z(z+1)...(z+2k)| / (2pi)^{2k+2} M^{-Re z-2k-1}.
double em_truncation_bound(Complex z, const EMConfig& cfg);

/// zeta(z) = sum_{n<M} n^-z + M^{1-z}/(z-1) + M^-z/2
///         + sum_{j<=k} B_2j/(2j)! M^{1-z-2j} prod_{l=0}^{2j-2} (z+l) + R_2k.
///
/// error_bound = truncation bound + a floating-point accumulation bound
/// (both also reported in meta as truncation_bound / rounding_bound).
/// Throws Pole at z = 1 and Config when Re z <= -2k.
SeriesResult zeta_euler_maclaurin(Complex z, const EMConfig& cfg);

/// zeta_euler_maclaurin with choose_em_config(z).
SeriesResult zeta_em_auto(Complex z);

/// Plain value of zeta_em_auto, the default evaluator of the library.
Complex zeta(Complex z);

/// zeta_n(z) - n^{1-z}/(1-z). Throws Pole at z = 1.
SeriesResult zeta_hat_partial(Complex z, std::size_t n);

} // namespace zetalab
