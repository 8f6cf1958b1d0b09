#include "zetalab/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zetalab/compensated.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/eulermac.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/zetasum.hpp"

namespace zetalab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_zeros(std::span<const ZeroRecord> zeros, std::size_t count)
{
    if (count == 0 || count > zeros.size())
        throw Error(ErrorKind::Domain, "need 1.." + std::to_string(zeros.size()) + " zeros, asked for " +
                                           std::to_string(count));
}

void require_primes(const PrimeTable& table, std::size_t count)
{
    if (count == 0 || count > table.count())
        throw Error(ErrorKind::Domain, "need 1.." + std::to_string(table.count()) + " primes, asked for " +
                                           std::to_string(count));
}

double pair_frac(double lambda, double log_p)
{
    const double x = lambda * (log_p / kTwoPi);
    return x - std::floor(x);
}

double cabs(Complex z) { return std::hypot(z.real(), z.imag()); }

ZetaEvaluator or_default(const ZetaEvaluator& e)
{
    if (e)
        return e;
    return [](Complex z) { return zeta(z); };
}

} // namespace

NormalizedPair normalize_pair(double lambda, double log_p)
{
    NormalizedPair p;
    p.mu = lambda;
    p.nu = log_p / kTwoPi;
    p.product = p.mu * p.nu;
    p.floor = std::floor(p.product);
    p.frac = p.product - p.floor;
    return p;
}

double nu(const PrimeTable& table, std::size_t k) { return table.logs()[k - 1] / kTwoPi; }

SeriesResult frac_statistic(std::span<const ZeroRecord> zeros, const PrimeTable& table, Direction direction,
                            std::size_t fixed_index, std::size_t count)
{
    CompensatedSum centered, products, floors, fracs;
    auto add_pair = [&](double lambda, double log_p) {
        const NormalizedPair p = normalize_pair(lambda, log_p);
        centered += p.frac - 0.5;
        products += p.product;
        floors += p.floor;
        fracs += p.frac;
    };
    if (direction == Direction::K) {
        require_zeros(zeros, fixed_index);
        require_primes(table, count);
        const double lambda = zeros[fixed_index - 1].lambda;
        for (std::size_t k = 0; k < count; ++k)
            add_pair(lambda, table.logs()[k]);
    } else {
        require_primes(table, fixed_index);
        require_zeros(zeros, count);
        const double log_p = table.logs()[fixed_index - 1];
        for (std::size_t j = 0; j < count; ++j)
            add_pair(zeros[j].lambda, log_p);
    }

    SeriesResult r;
    r.value = centered.value();
    r.truncation = count;
    const double c = static_cast<double>(count);
    r.meta["mean_frac"] = fracs.value() / c;
    r.meta["mean_centered"] = centered.value() / c;
    r.meta["sum_products"] = products.value();
    r.meta["sum_floors"] = floors.value();
    return r;
}

SeriesResult reconstruct_lambda(std::size_t j, std::span<const ZeroRecord> zeros, const PrimeTable& table,
                                std::size_t m, std::size_t bootstrap_iterations)
{
    require_zeros(zeros, j);
    require_primes(table, m);
    const double truth = zeros[j - 1].lambda;
    const double log_m = std::log(static_cast<double>(m));
    const double offset = std::numbers::pi / (log_m - 1.0);

    auto evaluate = [&](double lambda) {
        CompensatedSum floors;
        for (std::size_t k = 0; k < m; ++k)
            floors += std::floor(lambda * (table.logs()[k] / kTwoPi));
        return kTwoPi * floors.value() / (static_cast<double>(m) * (log_m - 1.0)) + offset;
    };

    double estimate = evaluate(truth);
    for (std::size_t i = 0; i < bootstrap_iterations; ++i)
        estimate = evaluate(estimate);

    SeriesResult r;
    r.value = estimate;
    r.truncation = m;
    r.meta["estimate"] = estimate;
    r.meta["truth"] = truth;
    r.meta["error"] = std::fabs(estimate - truth);
    r.meta["offset"] = offset;
    r.meta["bootstrap"] = static_cast<double>(bootstrap_iterations);
    return r;
}

SeriesResult reconstruct_prime(std::size_t k, std::span<const ZeroRecord> zeros, const PrimeTable& table,
                               std::size_t n)
{
    require_zeros(zeros, n);
    require_primes(table, k);
    const double log_p = table.logs()[k - 1];
    CompensatedSum floors;
    for (std::size_t j = 0; j < n; ++j)
        floors += std::floor(zeros[j].lambda * (log_p / kTwoPi));
    const double nn = static_cast<double>(n);
    const double exponent = 2.0 * floors.value() / (nn * nn) + 1.0 / nn;
    const double log_form = exponent * std::log(nn);
    const double estimate = std::exp(log_form);
    const double truth = static_cast<double>(table.prime(k));

    SeriesResult r;
    r.value = estimate;
    r.truncation = n;
    r.meta["estimate"] = estimate;
    r.meta["truth"] = truth;
    r.meta["relative_error"] = std::fabs(estimate - truth) / truth;
    r.meta["log_form"] = log_form;
    r.meta["exponent"] = exponent;
    return r;
}

double sin2_cdf(double theta) { return (theta - std::sin(theta) * std::cos(theta)) / std::numbers::pi; }

DistributionReport distribution_report(std::vector<double> angles, std::size_t bins)
{
    if (bins < 1)
        throw Error(ErrorKind::Domain, "histogram needs at least one bin");
    if (angles.empty())
        throw Error(ErrorKind::Domain, "histogram needs samples");
    constexpr double pi = std::numbers::pi;
    for (double& a : angles) {
        a = std::fmod(a, pi);
        if (a < 0.0)
            a += pi;
    }
    std::sort(angles.begin(), angles.end());

    DistributionReport rep;
    rep.sample_size = angles.size();
    const double n = static_cast<double>(angles.size());
    rep.edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i)
        rep.edges[i] = pi * static_cast<double>(i) / static_cast<double>(bins);
    rep.edges.back() = pi;

    std::vector<std::size_t> counts(bins, 0);
    for (double a : angles)
        ++counts[std::min(bins - 1, static_cast<std::size_t>(a / pi * static_cast<double>(bins)))];
    rep.empirical.resize(bins);
    rep.reference.resize(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        rep.empirical[i] = static_cast<double>(counts[i]) / n;
        rep.reference[i] = sin2_cdf(rep.edges[i + 1]) - sin2_cdf(rep.edges[i]);
    }

    double sup = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const double f = sin2_cdf(angles[i]);
        sup = std::max({sup, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    rep.sup_cdf = sup;

    double l1 = 0.0, emp_cdf = 0.0, prev_gap = 0.0;
    for (std::size_t i = 0; i < bins; ++i) {
        emp_cdf += rep.empirical[i];
        const double gap = std::fabs(emp_cdf - sin2_cdf(rep.edges[i + 1]));
        l1 += 0.5 * (prev_gap + gap) * (rep.edges[i + 1] - rep.edges[i]);
        prev_gap = gap;
    }
    rep.l1_cdf = l1;
    return rep;
}

DistributionReport sato_tate_histogram(std::span<const ZeroRecord> zeros, const PrimeTable& table,
                                       std::size_t j_count, std::size_t k_count, std::size_t bins,
                                       unsigned threads)
{
    require_zeros(zeros, j_count);
    require_primes(table, k_count);
    if (bins < 10)
        throw Error(ErrorKind::Domain, "histogram needs at least 10 bins");
    std::vector<double> angles(j_count * k_count);
    parallel_for(j_count, threads, [&](std::size_t j) {
        for (std::size_t k = 0; k < k_count; ++k)
            angles[j * k_count + k] = 0.5 * zeros[j].lambda * table.logs()[k];
    });
    return distribution_report(std::move(angles), bins);
}

SeriesResult function_equation_residual(std::span<const ZeroRecord> zeros, const PrimeTable& table,
                                        std::size_t M, std::size_t N, FunctionEquationVariant variant,
                                        unsigned threads)
{
    require_zeros(zeros, M);
    require_primes(table, N);
    const double shift = variant == FunctionEquationVariant::WithHalf ? 0.5 : 0.0;
    std::vector<double> stripes(M);
    parallel_for(M, threads, [&](std::size_t j) {
        CompensatedSum acc;
        for (std::size_t k = 0; k < N; ++k)
            acc += pair_frac(zeros[j].lambda, table.logs()[k]) - shift;
        stripes[j] = acc.value();
    });
    CompensatedSum total;
    for (double s : stripes)
        total += s;

    SeriesResult r;
    r.value = total.value();
    r.truncation = M * N;
    r.meta["pairs"] = static_cast<double>(M * N);
    r.meta["mean"] = total.value() / static_cast<double>(M * N);
    return r;
}

SeriesResult quotient_zeta_f(Complex z, const ZetaEvaluator& evaluator)
{
    if (z == Complex(1.0, 0.0) || z == Complex(0.5, 0.0))
        throw Error(ErrorKind::Pole, "f(z) = zeta(2z)/zeta(z) needs z != 1 and 2z != 1");
    const auto eval = or_default(evaluator);
    const Complex den = eval(z);
    if (cabs(den) < 1e-14)
        throw Error(ErrorKind::Pole, "zeta(z) vanishes: f has a pole here");
    const Complex num = eval(2.0 * z);

    SeriesResult r;
    r.value = cdiv(num, den);
    r.meta["numerator_re"] = num.real();
    r.meta["numerator_im"] = num.imag();
    r.meta["denominator_re"] = den.real();
    r.meta["denominator_im"] = den.imag();
    return r;
}

SeriesResult dirichlet_lambda(double n)
{
    if (!(n > 1.0))
        throw Error(ErrorKind::Domain, "Dirichlet lambda needs n > 1");

    constexpr std::size_t direct_terms = 1000;
    constexpr int pairs = 6;
    CompensatedSum series;
    for (std::size_t k = 0; k < direct_terms; ++k)
        series += std::pow(2.0 * static_cast<double>(k) + 1.0, -n);

    // Tail sum_{k>=K} (2k+1)^-n by Euler-Maclaurin at a = K:
    // int_a^inf f + f(a)/2 - sum_j B_2j/(2j)! f^(2j-1)(a).
    const double base = 2.0 * static_cast<double>(direct_terms) + 1.0;
    series += std::pow(base, 1.0 - n) / (2.0 * (n - 1.0));
    series += 0.5 * std::pow(base, -n);
    const auto bern = bernoulli_numbers(pairs + 1);
    // f^(m)(a) = 2^m (-n)(-n-1)...(-n-m+1) base^{-n-m}
    auto derivative = [&](int m) {
        double log_mag = m * std::numbers::ln2 - (n + m) * std::log(base);
        double sign = 1.0;
        for (int i = 0; i < m; ++i) {
            log_mag += std::log(n + i);
            sign = -sign;
        }
        return sign * std::exp(log_mag);
    };
    for (int j = 1; j <= pairs; ++j)
        series += -bern.b2j_over_factorial(j) * derivative(2 * j - 1);
    const double remainder = std::fabs(bern.b2j_over_factorial(pairs + 1) * derivative(2 * pairs + 1));

    const SeriesResult z = zeta_eta_regularized(Complex(n, 0.0), 1e-15);
    const double product_form = (1.0 - std::pow(2.0, -n)) * z.real();

    SeriesResult r;
    r.value = series.value();
    r.truncation = direct_terms;
    r.error_bound = remainder;
    r.meta["product_form"] = product_form;
    r.meta["difference"] = std::fabs(series.value() - product_form);
    r.meta["terms"] = static_cast<double>(direct_terms);
    return r;
}

SeriesResult g_n_product(Complex z, std::size_t n, const ZetaEvaluator& evaluator)
{
    if (n < 1 || n > 20)
        throw Error(ErrorKind::Domain, "g_n needs 1 <= n <= 20");
    const auto eval = or_default(evaluator);

    std::vector<Complex> values(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const Complex arg = std::ldexp(1.0, static_cast<int>(k)) * z;
        if (arg == Complex(1.0, 0.0))
            throw Error(ErrorKind::Pole, "2^" + std::to_string(k) + " z hits the pole of zeta (factor k=" +
                                             std::to_string(std::max<std::size_t>(k, 1)) + ")");
        values[k] = eval(arg);
    }

    Complex product(1.0, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        if (cabs(values[k - 1]) < 1e-14)
            throw Error(ErrorKind::Pole, "zeta(2^" + std::to_string(k - 1) + " z) vanishes in factor k=" +
                                             std::to_string(k));
        product = cmul(product, cdiv(values[k], values[k - 1]));
    }
    const Complex telescoped = cdiv(values[n], values[0]);

    SeriesResult r;
    r.value = product;
    r.truncation = n;
    r.meta["telescoped_re"] = telescoped.real();
    r.meta["telescoped_im"] = telescoped.imag();
    r.meta["difference"] = cabs(product - telescoped);
    return r;
}

} // namespace zetalab
