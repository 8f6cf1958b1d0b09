#pragma once

#include <cmath>
#include <complex>

namespace zetalab {

using Complex = std::complex<double>;

// The helpers below are written out component-wise so that every operation
// commutes exactly with complex conjugation. Conjugate-symmetry tests compare
// bit patterns, which the library routines of std::complex do not promise.

inline Complex cmul(Complex a, Complex b) noexcept
{
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline Complex cdiv(Complex a, Complex b) noexcept
{
    const double scale = std::fmax(std::fabs(b.real()), std::fabs(b.imag()));
    const double br = b.real() / scale;
    const double bi = b.imag() / scale;
    const double den = br * br + bi * bi;
    return {(a.real() * br + a.imag() * bi) / den / scale, (a.imag() * br - a.real() * bi) / den / scale};
}

inline Complex cexp(Complex z) noexcept
{
    const double mag = std::exp(z.real());
    return {mag * std::cos(z.imag()), mag * std::sin(z.imag())};
}

/// Principal logarithm.
inline Complex clog(Complex z) noexcept
{
    return {std::log(std::hypot(z.real(), z.imag())), std::atan2(z.imag(), z.real())};
}

/// log(1 + u), accurate for small |u|.
inline Complex clog1p(Complex u) noexcept
{
    const double re = u.real();
    const double im = u.imag();
    return {0.5 * std::log1p(2.0 * re + re * re + im * im), std::atan2(im, 1.0 + re)};
}

/// base^(-z) for a positive real base given through its logarithm. This is
/// the only complex-power path in the library: exp(-z log base) with a real
/// positive logarithm, which makes the power single valued.
inline Complex pow_neg(double log_base, Complex z) noexcept
{
    const double mag = std::exp(-z.real() * log_base);
    const double ang = z.imag() * log_base;
    return {mag * std::cos(ang), -mag * std::sin(ang)};
}

/// base^z for a positive real base given through its logarithm.
inline Complex pow_pos(double log_base, Complex z) noexcept
{
    return pow_neg(log_base, -z);
}

/// Principal square root, conjugation-exact.
inline Complex csqrt(Complex z) noexcept
{
    const double r = std::hypot(z.real(), z.imag());
    if (r == 0.0)
        return {0.0, 0.0};
    if (z.real() >= 0.0) {
        const double re = std::sqrt(0.5 * (r + z.real()));
        return {re, z.imag() / (2.0 * re)};
    }
    const double im = std::sqrt(0.5 * (r - z.real()));
    return {std::fabs(z.imag()) / (2.0 * im), std::signbit(z.imag()) ? -im : im};
}

} // namespace zetalab
