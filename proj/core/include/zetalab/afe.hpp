#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zetalab/complex_ops.hpp"
#include "zetalab/series.hpp"

namespace zetalab {

/// log Gamma(z) on some branch (Lanczos, g = 7, with reflection for
/// Re z < 1/2). Only the exponential is meaningful.
Complex log_gamma(Complex z);

/// Gamma(z). Throws ErrorKind::Pole at nonpositive integers.
Complex gamma_complex(Complex z);

/// log sin(pi z) on some branch, stable for large |Im z|.
Complex log_sin_pi(Complex z);

/// H(z) = 2 Gamma(1-z) (2pi)^{z-1} sin(pi z / 2), the factor in
/// zeta(z) = H(z) zeta(1-z). At even positive integers the removable
/// singularity is evaluated as (2pi)^z / (2 cos(pi z/2) Gamma(z)).
/// Throws ErrorKind::Pole at odd positive integers.
Complex H(Complex z);

/// zeta_n(z) + H(z) zeta_n(1-z) for 0 < Re z < 1, with the remainder
/// n^{-Re z} + (2 pi n)^{1/2 - Re z} n^{Re z - 1} as a heuristic error bound
/// (unit implied constants; heuristic_bound is set).
SeriesResult afe_eval(Complex z, std::size_t n);

/// Continuous phase theta(t) with exp(-2i theta(t)) = H(1/2+it)/|H(1/2+it)|
/// and theta(0) = 0, sampled on a grid and recoverable at any t inside it.
class PhaseCurve {
public:
    std::span<const double> grid() const noexcept { return grid_; }
    std::span<const double> theta() const noexcept { return theta_; }
    double t_min() const noexcept { return grid_.front(); }
    double t_max() const noexcept { return grid_.back(); }

    /// theta at any t in [t_min, t_max]: the branch of -arg H(1/2+it)/2
    /// nearest the interpolated curve.
    double at(double t) const;

private:
    friend PhaseCurve theta_phase(std::span<const double> grid);
    std::vector<double> grid_;
    std::vector<double> theta_;
};

/// Unwraps the phase of H along the grid. Every step is checked through its
/// midpoint: each half step must move the phase of H by less than pi/2, so
/// a full step stays below pi. Throws GridTooCoarse otherwise, Domain when
/// the grid does not start at 0 or is not strictly increasing.
PhaseCurve theta_phase(std::span<const double> grid);

/// Uniform grid [0, t_max] with the given step.
PhaseCurve theta_phase_uniform(double t_max, double step = 0.05);

/// Z(t) = Re[exp(i theta(t)) zeta(1/2+it)]. The rotated value is real in
/// exact arithmetic; an imaginary residual above 1e-6 throws
/// EvaluatorAccuracy.
double hardy_Z(double t, const PhaseCurve& curve, const ZetaEvaluator& evaluator);

/// Hardy Z with its own phase curve and evaluator (Euler-Maclaurin with
/// automatic configuration unless given).
class HardyZ {
public:
    explicit HardyZ(double t_max, ZetaEvaluator evaluator = {});

    double operator()(double t) const { return hardy_Z(t, curve_, evaluator_); }
    const PhaseCurve& curve() const noexcept { return curve_; }
    const ZetaEvaluator& evaluator() const noexcept { return evaluator_; }

private:
    PhaseCurve curve_;
    ZetaEvaluator evaluator_;
};

} // namespace zetalab
