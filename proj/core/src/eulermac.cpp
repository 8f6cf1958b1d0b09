#include "zetalab/eulermac.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "zetalab/compensated.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/zetasum.hpp"

namespace zetalab {

namespace {

namespace mp = boost::multiprecision;

constexpr int kMaxIndex = 2 * kMaxBernoulliPairs + 1;

struct ExactBernoulli {
    std::array<double, kMaxIndex + 1> b{};
    std::array<double, kMaxIndex + 1> over_factorial{};
    // poly[n][j] = C(n, j) B_j, rounded once from the exact rational.
    std::vector<std::vector<long double>> poly;
};

long double to_long_double(const mp::cpp_rational& q)
{
    using wide = mp::cpp_bin_float_100;
    return static_cast<long double>(wide(mp::numerator(q)) / wide(mp::denominator(q)));
}

double to_double(const mp::cpp_rational& q)
{
    using wide = mp::cpp_bin_float_100;
    return static_cast<double>(wide(mp::numerator(q)) / wide(mp::denominator(q)));
}

// B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0, in exact rational arithmetic.
const ExactBernoulli& exact_bernoulli()
{
    static const ExactBernoulli table = [] {
        std::array<mp::cpp_rational, kMaxIndex + 1> b;
        b[0] = 1;
        for (int n = 1; n <= kMaxIndex; ++n) {
            mp::cpp_rational acc = 0;
            mp::cpp_int binom = 1; // C(n+1, 0)
            for (int j = 0; j < n; ++j) {
                acc += mp::cpp_rational(binom) * b[j];
                binom = binom * (n + 1 - j) / (j + 1);
            }
            b[n] = -acc / (n + 1);
        }
        ExactBernoulli out;
        mp::cpp_int factorial = 1;
        for (int n = 0; n <= kMaxIndex; ++n) {
            if (n > 0)
                factorial *= n;
            out.b[n] = to_double(b[n]);
            out.over_factorial[n] = to_double(b[n] / mp::cpp_rational(factorial));
        }
        out.poly.resize(kMaxIndex + 1);
        for (int n = 0; n <= kMaxIndex; ++n) {
            mp::cpp_int binom = 1;
            for (int j = 0; j <= n; ++j) {
                out.poly[n].push_back(to_long_double(mp::cpp_rational(binom) * b[j]));
                binom = binom * (n - j) / (j + 1);
            }
        }
        return out;
    }();
    return table;
}

double cabs(Complex z) { return std::hypot(z.real(), z.imag()); }

// log prod_{l=0}^{last} (z + l); returns false when a factor is exactly zero.
bool log_rising(Complex z, int last, Complex& out)
{
    out = {0.0, 0.0};
    for (int l = 0; l <= last; ++l) {
        const Complex f = z + static_cast<double>(l);
        if (f == Complex(0.0, 0.0))
            return false;
        out += clog(f);
    }
    return true;
}

void validate(Complex z, const EMConfig& cfg)
{
    if (z == Complex(1.0, 0.0))
        throw Error(ErrorKind::Pole, "zeta has a pole at z = 1");
    if (cfg.M < 2)
        throw Error(ErrorKind::Config, "Euler-Maclaurin split point M must be >= 2");
    if (cfg.k < 1 || cfg.k > kMaxBernoulliPairs)
        throw Error(ErrorKind::Config, "Euler-Maclaurin k must be in [1, " + std::to_string(kMaxBernoulliPairs) + "]");
    if (z.real() <= -2.0 * cfg.k)
        throw Error(ErrorKind::Config, "Re z <= -2k; increase k to at least " +
                                           std::to_string(static_cast<int>(std::floor(-z.real() / 2.0)) + 1));
}

} // namespace

BernoulliTable bernoulli_numbers(int k_max)
{
    if (k_max < 1)
        throw Error(ErrorKind::Domain, "k_max must be >= 1");
    if (k_max > kMaxBernoulliPairs)
        throw Error(ErrorKind::Capacity,
                    "k_max=" + std::to_string(k_max) + " exceeds " + std::to_string(kMaxBernoulliPairs));
    const auto& exact = exact_bernoulli();
    BernoulliTable t;
    for (int j = 1; j <= k_max; ++j) {
        t.b2j_.push_back(exact.b[2 * j]);
        t.scaled_.push_back(exact.over_factorial[2 * j]);
    }
    return t;
}

double bernoulli_number(int n)
{
    if (n < 0 || n > kMaxIndex)
        throw Error(ErrorKind::Capacity, "Bernoulli index " + std::to_string(n) + " out of range");
    return exact_bernoulli().b[n];
}

double periodized_bernoulli(double x, int order)
{
    if (order < 0 || order > kMaxIndex)
        throw Error(ErrorKind::Capacity, "Bernoulli polynomial order " + std::to_string(order) + " out of range");
    const long double u = x - std::floor(x);
    // B_n(u) = sum_j C(n, j) B_j u^{n-j}, by Horner in u.
    long double acc = 0.0L;
    for (long double c : exact_bernoulli().poly[static_cast<std::size_t>(order)])
        acc = acc * u + c;
    return static_cast<double>(acc);
}

EMConfig base_em_config(Complex z) noexcept
{
    const int m = static_cast<int>(std::ceil(std::fabs(z.imag()) / (2.0 * std::numbers::pi))) + 10;
    return EMConfig{std::max(m, 16), 10};
}

double em_truncation_bound(Complex z, const EMConfig& cfg)
{
    Complex log_prod;
    if (!log_rising(z, 2 * cfg.k, log_prod))
        return 0.0;
    const double k = cfg.k;
    const double log_bound = log_prod.real() - (2.0 * k + 2.0) * std::log(2.0 * std::numbers::pi) -
                             (z.real() + 2.0 * k + 1.0) * std::log(static_cast<double>(cfg.M));
    return std::numbers::pi * std::numbers::pi / 3.0 * cabs(z + (2.0 * k + 1.0)) / (2.0 * k + 1.5) *
           std::exp(log_bound);
}

EMConfig choose_em_config(Complex z, double target)
{
    EMConfig cfg = base_em_config(z);
    if (z.real() <= -2.0 * cfg.k)
        cfg.k = std::min(kMaxBernoulliPairs, static_cast<int>(std::floor(-z.real() / 2.0)) + 10);
    while (cfg.M < 1'000'000 && em_truncation_bound(z, cfg) > target)
        cfg.M += std::max(1, cfg.M / 8);
    return cfg;
}

SeriesResult zeta_euler_maclaurin(Complex z, const EMConfig& cfg)
{
    validate(z, cfg);
    const auto& exact = exact_bernoulli();
    const double eps = std::numeric_limits<double>::epsilon();
    const double zabs = cabs(z);
    const double log_m = std::log(static_cast<double>(cfg.M));

    CompensatedComplexSum acc;
    double magnitude = 0.0;
    for (int n = 1; n < cfg.M; ++n) {
        const double ln = std::log(static_cast<double>(n));
        const Complex term = pow_neg(ln, z);
        acc += term;
        magnitude += cabs(term) * (4.0 + zabs * ln);
    }

    const Complex zm1 = z - 1.0;
    const Complex integral = cdiv(pow_neg(log_m, zm1), zm1);
    const Complex half = 0.5 * pow_neg(log_m, z);
    acc += integral;
    acc += half;
    double tail_magnitude = cabs(integral) + cabs(half);

    Complex log_prod{0.0, 0.0};
    bool vanished = false;
    int next_factor = 0;
    for (int j = 1; j <= cfg.k; ++j) {
        for (; next_factor <= 2 * j - 2; ++next_factor) {
            const Complex f = z + static_cast<double>(next_factor);
            if (f == Complex(0.0, 0.0))
                vanished = true;
            else
                log_prod += clog(f);
        }
        if (vanished)
            break;
        const Complex term =
            exact.over_factorial[2 * j] * cexp(log_prod - (z + (2.0 * j - 1.0)) * log_m);
        acc += term;
        tail_magnitude += cabs(term);
    }

    const double truncation = em_truncation_bound(z, cfg);
    const double rounding = 8.0 * eps * (magnitude + tail_magnitude * (4.0 + zabs * log_m));

    SeriesResult r;
    r.value = acc.value();
    r.truncation = static_cast<std::size_t>(cfg.M);
    r.error_bound = truncation + rounding;
    r.meta["M"] = cfg.M;
    r.meta["k"] = cfg.k;
    r.meta["truncation_bound"] = truncation;
    r.meta["rounding_bound"] = rounding;
    return r;
}

SeriesResult zeta_em_auto(Complex z)
{
    if (z == Complex(1.0, 0.0))
        throw Error(ErrorKind::Pole, "zeta has a pole at z = 1");
    return zeta_euler_maclaurin(z, choose_em_config(z));
}

Complex zeta(Complex z) { return zeta_em_auto(z).value; }

SeriesResult zeta_hat_partial(Complex z, std::size_t n)
{
    if (z == Complex(1.0, 0.0))
        throw Error(ErrorKind::Pole, "regularized partial sum has a pole at z = 1");
    SeriesResult r = zeta_partial_sum(z, n);
    const Complex one_minus = Complex(1.0, 0.0) - z;
    const Complex correction = cdiv(pow_pos(std::log(static_cast<double>(n)), one_minus), one_minus);
    r.meta["partial_re"] = r.value.real();
    r.meta["partial_im"] = r.value.imag();
    r.value -= correction;
    return r;
}

} // namespace zetalab
