#include "zetalab/afe.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/eulermac.hpp"
#include "zetalab/zetasum.hpp"

namespace zetalab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2Pi = 1.8378770664093454835606594728112; // log(2 pi)
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool is_nonpositive_integer(Complex z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

bool is_odd_positive_integer(Complex z)
{
    return z.imag() == 0.0 && z.real() > 0.0 && z.real() == std::floor(z.real()) &&
           std::fmod(z.real(), 2.0) == 1.0;
}

Complex log_gamma_right(Complex z)
{
    const Complex x = z - 1.0;
    Complex series = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        series += cdiv(Complex(kLanczos[i], 0.0), x + static_cast<double>(i));
    const Complex t = x + (kLanczosG + 0.5);
    return 0.5 * kLog2Pi + cmul(x + 0.5, clog(t)) - t + clog(series);
}

double nearest_branch(double raw, double reference)
{
    return raw + kPi * std::round((reference - raw) / kPi);
}

double raw_theta(double t) { return -0.5 * std::arg(H(Complex(0.5, t))); }

} // namespace

Complex log_sin_pi(Complex z)
{
    if (z.imag() < 0.0)
        return std::conj(log_sin_pi(std::conj(z)));
    // sin(pi z) = e^{-i pi z} (1 - w) (i/2) with w = e^{2 i pi z}, |w| <= 1.
    const Complex w = cexp(Complex(-2.0 * kPi * z.imag(), 2.0 * kPi * z.real()));
    const Complex minus_i_pi_z(kPi * z.imag(), -kPi * z.real());
    return minus_i_pi_z + clog1p(-w) + Complex(-std::numbers::ln2, 0.5 * kPi);
}

Complex log_gamma(Complex z)
{
    if (is_nonpositive_integer(z))
        throw Error(ErrorKind::Pole, "Gamma has a pole at nonpositive integers");
    if (z.real() < 0.5)
        return std::log(kPi) - log_sin_pi(z) - log_gamma_right(Complex(1.0, 0.0) - z);
    return log_gamma_right(z);
}

Complex gamma_complex(Complex z) { return cexp(log_gamma(z)); }

Complex H(Complex z)
{
    if (is_odd_positive_integer(z))
        throw Error(ErrorKind::Pole, "H has an uncancelled pole at odd positive integers");
    if (z.real() > 1.0) {
        // cos(pi z / 2) = sin(pi (z + 1) / 2)
        const Complex log_h = z * kLog2Pi - std::numbers::ln2 - log_sin_pi(0.5 * (z + 1.0)) - log_gamma(z);
        return cexp(log_h);
    }
    const Complex log_h =
        std::numbers::ln2 + log_gamma(Complex(1.0, 0.0) - z) + (z - 1.0) * kLog2Pi + log_sin_pi(0.5 * z);
    return cexp(log_h);
}

SeriesResult afe_eval(Complex z, std::size_t n)
{
    if (!(z.real() > 0.0 && z.real() < 1.0))
        throw Error(ErrorKind::Domain, "approximate functional equation needs 0 < Re z < 1");
    if (n == 0)
        throw Error(ErrorKind::Domain, "approximate functional equation needs n >= 1");

    const Complex direct = zeta_partial_sum(z, n).value;
    const Complex reflected = zeta_partial_sum(Complex(1.0, 0.0) - z, n).value;
    const Complex h = H(z);

    SeriesResult r;
    r.value = direct + cmul(h, reflected);
    r.truncation = n;
    const double sigma = z.real();
    const double nn = static_cast<double>(n);
    r.error_bound = std::pow(nn, -sigma) + std::pow(2.0 * kPi * nn, 0.5 - sigma) * std::pow(nn, sigma - 1.0);
    r.heuristic_bound = true;
    r.meta["direct_re"] = direct.real();
    r.meta["direct_im"] = direct.imag();
    r.meta["reflected_re"] = reflected.real();
    r.meta["reflected_im"] = reflected.imag();
    r.meta["H_re"] = h.real();
    r.meta["H_im"] = h.imag();
    return r;
}

double PhaseCurve::at(double t) const
{
    if (!(t >= t_min() && t <= t_max()))
        throw Error(ErrorKind::Domain, "t=" + std::to_string(t) + " outside the phase curve range");
    const auto hi = std::upper_bound(grid_.begin(), grid_.end(), t);
    double reference;
    if (hi == grid_.end()) {
        reference = theta_.back();
    } else {
        const std::size_t j = static_cast<std::size_t>(hi - grid_.begin());
        const double frac = (t - grid_[j - 1]) / (grid_[j] - grid_[j - 1]);
        reference = theta_[j - 1] + frac * (theta_[j] - theta_[j - 1]);
    }
    return nearest_branch(raw_theta(t), reference);
}

PhaseCurve theta_phase(std::span<const double> grid)
{
    if (grid.empty() || grid.front() != 0.0)
        throw Error(ErrorKind::Domain, "phase grid must start at t = 0");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw Error(ErrorKind::Domain, "phase grid must be strictly increasing");

    PhaseCurve curve;
    curve.grid_.assign(grid.begin(), grid.end());
    curve.theta_.resize(grid.size());
    curve.theta_[0] = 0.0;
    constexpr double limit = kPi / 4.0; // theta moves half as fast as the phase of H
    for (std::size_t j = 1; j < grid.size(); ++j) {
        const double prev = curve.theta_[j - 1];
        const double mid = nearest_branch(raw_theta(0.5 * (grid[j - 1] + grid[j])), prev);
        const double next = nearest_branch(raw_theta(grid[j]), mid);
        if (std::fabs(mid - prev) >= limit || std::fabs(next - mid) >= limit)
            throw Error(ErrorKind::GridTooCoarse, "phase of H moves by pi or more between t=" +
                                                      std::to_string(grid[j - 1]) + " and t=" +
                                                      std::to_string(grid[j]) + "; refine the grid");
        curve.theta_[j] = next;
    }
    return curve;
}

PhaseCurve theta_phase_uniform(double t_max, double step)
{
    if (!(t_max > 0.0) || !(step > 0.0))
        throw Error(ErrorKind::Domain, "phase grid needs t_max > 0 and step > 0");
    const auto count = static_cast<std::size_t>(std::ceil(t_max / step - 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = std::min(t_max, static_cast<double>(i) * step);
    return theta_phase(grid);
}

double hardy_Z(double t, const PhaseCurve& curve, const ZetaEvaluator& evaluator)
{
    const double theta = curve.at(t);
    const Complex z = evaluator(Complex(0.5, t));
    const Complex rotated = cmul(Complex(std::cos(theta), std::sin(theta)), z);
    if (std::fabs(rotated.imag()) > 1e-6)
        throw Error(ErrorKind::EvaluatorAccuracy, "rotated zeta at t=" + std::to_string(t) +
                                                      " has imaginary residual " + std::to_string(rotated.imag()));
    return rotated.real();
}

HardyZ::HardyZ(double t_max, ZetaEvaluator evaluator)
    : curve_(theta_phase_uniform(std::max(t_max, 1.0))),
      evaluator_(evaluator ? std::move(evaluator) : ZetaEvaluator([](Complex z) { return zeta(z); }))
{
}

} // namespace zetalab
