#include "zetalab/zetasum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "zetalab/compensated.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"

namespace zetalab {

namespace {

constexpr std::size_t kEtaLevels = 40;
constexpr std::size_t kBlock = 256;
constexpr std::size_t kLanes = 8;

void check_table(const PrimeTable& table, std::size_t n)
{
    if (n == 0 || n > table.count())
        throw Error(ErrorKind::Domain,
                    "need 1 <= n <= " + std::to_string(table.count()) + ", got " + std::to_string(n));
}

double cabs(Complex z) { return std::hypot(z.real(), z.imag()); }

// Term (-1)^{k-1} k^{-z}.
Complex eta_term(std::size_t k, Complex z)
{
    const Complex a = pow_neg(std::log(static_cast<double>(k)), z);
    return (k % 2 == 1) ? a : -a;
}

std::vector<double> prime_weights(double alpha, const PrimeTable& table, std::size_t n)
{
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k)
        w[k] = std::exp(-alpha * table.logs()[k]);
    return w;
}

ExperimentReport superposition_report(double alpha, std::size_t n, std::size_t points)
{
    ExperimentReport report;
    report.name = "superpose";
    report.set("version", std::string(kVersion));
    report.set("alpha", alpha);
    report.set("n", static_cast<std::int64_t>(n));
    report.set("points", static_cast<std::int64_t>(points));
    report.columns = {"t", "y"};
    return report;
}

} // namespace

SeriesResult zeta_partial_sum(Complex z, std::size_t n)
{
    if (n == 0)
        throw Error(ErrorKind::Domain, "partial sum needs n >= 1");
    CompensatedComplexSum acc;
    for (std::size_t k = 1; k <= n; ++k)
        acc += pow_neg(std::log(static_cast<double>(k)), z);
    SeriesResult r;
    r.value = acc.value();
    r.truncation = n;
    return r;
}

SeriesResult zeta_eta_regularized(Complex z, double tol)
{
    if (!(z.real() > 0.0))
        throw Error(ErrorKind::Domain, "eta regularization needs Re z > 0");
    if (!(tol > 0.0))
        throw Error(ErrorKind::Domain, "tolerance must be positive");

    const Complex factor = Complex(1.0, 0.0) - pow_pos(std::numbers::ln2, Complex(1.0, 0.0) - z);
    const double factor_abs = cabs(factor);
    if (factor_abs < 1e-12)
        throw Error(ErrorKind::EtaPole, "1 - 2^(1-z) vanishes at this z (spurious eta zero)");
    const double scale = 1.0 / factor_abs;

    std::size_t start = std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(2.0 * cabs(z))));
    start = std::min(start, kEtaTermCap - kEtaLevels);

    CompensatedComplexSum head;
    std::size_t summed = 0;
    std::array<Complex, kEtaLevels + 1> sums{};
    Complex estimate_value;
    double estimate_error = 0.0;
    bool converged = false;

    for (;;) {
        while (summed < start)
            head += eta_term(++summed, z);

        CompensatedComplexSum tail = head;
        sums[0] = tail.value();
        for (std::size_t i = 1; i <= kEtaLevels; ++i) {
            tail += eta_term(start + i, z);
            sums[i] = tail.value();
        }
        Complex before_last;
        for (std::size_t level = 1; level <= kEtaLevels; ++level) {
            if (level == kEtaLevels)
                before_last = sums[0];
            for (std::size_t i = 0; i + level <= kEtaLevels; ++i)
                sums[i] = 0.5 * (sums[i] + sums[i + 1]);
        }
        estimate_value = sums[0];
        estimate_error = cabs(sums[0] - before_last) * scale;

        if (estimate_error < tol) {
            converged = true;
            break;
        }
        if (start + kEtaLevels >= kEtaTermCap)
            break;
        start = std::min(2 * start, kEtaTermCap - kEtaLevels);
    }

    SeriesResult r;
    r.value = cdiv(estimate_value, factor);
    r.truncation = start + kEtaLevels;
    // Phase error of each term grows like eps * |t| * log k.
    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() *
                            (1.0 + std::fabs(z.imag()) * std::log(static_cast<double>(r.truncation))) *
                            std::max(1.0, cabs(estimate_value)) * scale;
    r.error_bound = estimate_error + rounding;
    r.heuristic_bound = true;
    r.meta["converged"] = converged ? 1.0 : 0.0;
    r.meta["levels"] = static_cast<double>(kEtaLevels);
    r.meta["eta_re"] = estimate_value.real();
    r.meta["eta_im"] = estimate_value.imag();
    return r;
}

SeriesResult euler_product_partial(Complex z, const PrimeTable& table, std::size_t m)
{
    check_table(table, m);
    CompensatedComplexSum log_acc;
    for (std::size_t k = 0; k < m; ++k) {
        const Complex w = pow_neg(table.logs()[k], z);
        const Complex one_minus = Complex(1.0, 0.0) - w;
        if (cabs(one_minus) < 1e-15)
            throw ProductSingularityError(k + 1, "Euler factor 1 - p_k^-z vanishes at k=" + std::to_string(k + 1));
        log_acc += -clog1p(-w);
    }
    SeriesResult r;
    const Complex log_value = log_acc.value();
    r.value = cexp(log_value);
    r.truncation = m;
    r.meta["log_re"] = log_value.real();
    r.meta["log_im"] = log_value.imag();
    return r;
}

SeriesResult standard_form_f(double s, double t, const PrimeTable& table, std::size_t n)
{
    if (!(s > 0.0))
        throw Error(ErrorKind::Domain, "standard form needs s > 0");
    check_table(table, n);
    CompensatedSum log_acc;
    for (std::size_t k = 0; k < n; ++k) {
        const double lp = table.logs()[k];
        const double u = 2.0 * std::exp(-0.5 * s * lp) * std::cos(s * t * lp) - std::exp(-s * lp);
        log_acc += std::log1p(-u);
    }
    SeriesResult r;
    r.meta["log_f"] = log_acc.value();
    r.value = std::exp(log_acc.value());
    r.truncation = n;
    return r;
}

SeriesResult log_f_expansion(double s, double t, const PrimeTable& table, std::size_t n, int order)
{
    if (!(s >= 1.0))
        throw Error(ErrorKind::Domain, "log expansion needs s >= 1");
    if (order < 1 || order > 3)
        throw Error(ErrorKind::Domain, "expansion order must be 1, 2 or 3");
    check_table(table, n);

    CompensatedSum expansion, exact, tail;
    std::vector<std::size_t> exempt;
    for (std::size_t k = 0; k < n; ++k) {
        const double lp = table.logs()[k];
        const double u = 2.0 * std::exp(-0.5 * s * lp) * std::cos(s * t * lp) - std::exp(-s * lp);
        const double exact_term = std::log1p(-u);
        exact += exact_term;
        const double au = std::fabs(u);
        if (au >= 1.0) {
            exempt.push_back(k + 1);
            expansion += exact_term;
            continue;
        }
        double power = 1.0;
        double series = 0.0;
        for (int m = 1; m <= order; ++m) {
            power *= u;
            series -= power / m;
        }
        expansion += series;
        tail += std::pow(au, order + 1) / ((order + 1) * (1.0 - au));
    }

    SeriesResult r;
    r.value = expansion.value();
    r.truncation = n;
    r.error_bound = tail.value();
    r.meta["exact_log_f"] = exact.value();
    r.meta["discrepancy"] = std::fabs(expansion.value() - exact.value());
    r.meta["tail_bound"] = tail.value();
    r.meta["order"] = order;
    r.meta["exempt_count"] = static_cast<double>(exempt.size());
    r.indices = std::move(exempt);
    return r;
}

SeriesResult regularized_ratio(double s, double t, const PrimeTable& table, std::size_t n)
{
    if (!(s >= 1.0))
        throw Error(ErrorKind::Domain, "regularized ratio needs s >= 1");
    check_table(table, n);

    const SeriesResult f = standard_form_f(s, t, table, n);
    CompensatedSum log_divisor;
    CompensatedSum square_part, leading, recip;
    for (std::size_t k = 0; k < n; ++k) {
        const double p = static_cast<double>(table.primes()[k]);
        log_divisor += std::log1p(1.0 / p);
        const double q = std::cos(t * table.logs()[k]) * (1.0 / std::sqrt(p));
        square_part += q * (q + 1.0);
        leading += q;
        recip += 1.0 / p;
    }

    SeriesResult r;
    const double log_ratio = f.diag("log_f") - log_divisor.value();
    r.value = std::exp(log_ratio);
    r.truncation = n;
    const double numerator = -2.0 * square_part.value() + recip.value();
    r.meta["log_ratio"] = log_ratio;
    r.meta["numerator"] = numerator;
    r.meta["denominator"] = recip.value();
    r.meta["summation_ratio"] = numerator / recip.value();
    r.meta["leading_term"] = leading.value();
    return r;
}

UniformGrid UniformGrid::span(double t_min, double t_max, double step)
{
    if (!(step > 0.0) || !(t_max >= t_min))
        throw Error(ErrorKind::Domain, "grid needs step > 0 and t_max >= t_min");
    const double span = (t_max - t_min) / step;
    return UniformGrid{t_min, step, static_cast<std::size_t>(std::floor(span + 1e-9)) + 1};
}

double superposition_value(double alpha, const PrimeTable& table, std::size_t n, double t)
{
    check_table(table, n);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        acc += std::cos(t * table.logs()[k]) * std::exp(-alpha * table.logs()[k]);
    return -acc;
}

ExperimentReport cosine_superposition(double alpha, const PrimeTable& table, std::size_t n,
                                      std::span<const double> grid, unsigned threads)
{
    if (!(alpha > 0.0))
        throw Error(ErrorKind::Domain, "alpha must be positive");
    check_table(table, n);
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw Error(ErrorKind::Domain, "grid must be strictly increasing");

    const auto w = prime_weights(alpha, table, n);
    const auto logs = table.logs();
    std::vector<double> y(grid.size());
    const std::size_t blocks = (grid.size() + kBlock - 1) / kBlock;
    parallel_for(blocks, threads, [&](std::size_t b) {
        const std::size_t end = std::min(grid.size(), (b + 1) * kBlock);
        for (std::size_t j = b * kBlock; j < end; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += w[k] * std::cos(grid[j] * logs[k]);
            y[j] = -acc;
        }
    });

    ExperimentReport report = superposition_report(alpha, n, grid.size());
    report.set("grid", std::string("explicit"));
    report.rows.reserve(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
        report.rows.push_back({grid[j], y[j]});
    return report;
}

ExperimentReport cosine_superposition(double alpha, const PrimeTable& table, std::size_t n,
                                      const UniformGrid& grid, unsigned threads)
{
    if (!(alpha > 0.0))
        throw Error(ErrorKind::Domain, "alpha must be positive");
    if (!(grid.step > 0.0))
        throw Error(ErrorKind::Domain, "grid step must be positive");
    check_table(table, n);

    // Lanes are padded to a multiple of kLanes with zero weight.
    const std::size_t padded = (n + kLanes - 1) / kLanes * kLanes;
    std::vector<double> w(padded, 0.0), logs(padded, 0.0), step_cos(padded, 1.0), step_sin(padded, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        logs[k] = table.logs()[k];
        w[k] = std::exp(-alpha * logs[k]);
        step_cos[k] = std::cos(grid.step * logs[k]);
        step_sin[k] = std::sin(grid.step * logs[k]);
    }

    std::vector<double> y(grid.count);
    const std::size_t blocks = (grid.count + kBlock - 1) / kBlock;
    parallel_for(blocks, threads, [&](std::size_t b) {
        const std::size_t first = b * kBlock;
        const std::size_t len = std::min(grid.count, first + kBlock) - first;
        const double anchor = grid.at(first);
        std::vector<std::array<double, kLanes>> acc(len);
        for (auto& a : acc)
            a.fill(0.0);
        for (std::size_t k0 = 0; k0 < padded; k0 += kLanes) {
            double c[kLanes], s[kLanes], cr[kLanes], sr[kLanes], wt[kLanes];
            for (std::size_t l = 0; l < kLanes; ++l) {
                const double phase = anchor * logs[k0 + l];
                c[l] = std::cos(phase);
                s[l] = std::sin(phase);
                cr[l] = step_cos[k0 + l];
                sr[l] = step_sin[k0 + l];
                wt[l] = w[k0 + l];
            }
            for (std::size_t i = 0; i < len; ++i) {
                auto& a = acc[i];
                for (std::size_t l = 0; l < kLanes; ++l) {
                    a[l] += wt[l] * c[l];
                    const double cn = c[l] * cr[l] - s[l] * sr[l];
                    s[l] = c[l] * sr[l] + s[l] * cr[l];
                    c[l] = cn;
                }
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            double total = 0.0;
            for (std::size_t l = 0; l < kLanes; ++l)
                total += acc[i][l];
            y[first + i] = -total;
        }
    });

    ExperimentReport report = superposition_report(alpha, n, grid.count);
    report.set("grid", std::string("uniform"));
    report.set("t_min", grid.t_min);
    report.set("step", grid.step);
    report.rows.reserve(grid.count);
    for (std::size_t j = 0; j < grid.count; ++j)
        report.rows.push_back({grid.at(j), y[j]});
    return report;
}

} // namespace zetalab
