#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"
#include "zetalab/duality.hpp"
#include "zetalab/eulermac.hpp"
#include "zetalab/errors.hpp"

using namespace zetalab;
using support::lambda1;
constexpr double kPi = std::numbers::pi;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::Io;
}

// Inverse CDF of (2/pi) sin^2 by bisection.
double sample_sin2(double u)
{
    double lo = 0.0, hi = kPi;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (sin2_cdf(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double unit(std::mt19937& gen) { return (static_cast<double>(gen()) + 0.5) / 4294967296.0; }

} // namespace

TEST(Normalize, SinglePair)
{
    const auto p = normalize_pair(lambda1(), std::log(2.0));
    const long double product = static_cast<long double>(lambda1()) * std::log(2.0L) / (2 * std::numbers::pi_v<long double>);
    EXPECT_NEAR(p.product, static_cast<double>(product), 1e-14);
    EXPECT_NEAR(p.product, 1.559312, 1e-6);
    EXPECT_EQ(p.floor, 1.0);
    EXPECT_NEAR(p.frac, static_cast<double>(product - 1.0L), 1e-14);
    EXPECT_EQ(p.mu, lambda1());
}

TEST(Normalize, FracInvariantUnderIntegerShifts)
{
    for (double x : {0.3, 7.25, 1e3 + 0.125}) {
        const auto base = normalize_pair(x * 2 * kPi, 1.0);
        for (int shift : {1, 5, 100}) {
            const auto moved = normalize_pair((x + shift) * 2 * kPi, 1.0);
            EXPECT_NEAR(moved.frac, base.frac, 1e-9);
            EXPECT_EQ(moved.floor, base.floor + shift);
        }
        EXPECT_GE(base.frac, 0.0);
        EXPECT_LT(base.frac, 1.0);
    }
}

TEST(Normalize, NuRoundTrip)
{
    const auto& t = support::primes();
    for (std::size_t k : {1u, 2u, 10u, 1000u, 1000000u}) {
        const double p = static_cast<double>(t.prime(k));
        EXPECT_NEAR(std::exp(2 * kPi * nu(t, k)) / p, 1.0, 1e-14) << k;
    }
}

TEST(FracStatistic, KDirectionMeanNearHalf)
{
    const auto zeros = support::oracle_zero_records();
    const auto r = frac_statistic(zeros, support::primes(), Direction::K, 1, 100000);
    EXPECT_LT(std::fabs(r.diag("mean_frac") - 0.5), 0.01);
    EXPECT_NEAR(r.real(), r.diag("sum_products") - 0.5 * 100000 - r.diag("sum_floors"), 1e-6 * 100000);
    EXPECT_NEAR(r.diag("mean_centered"), r.real() / 100000, 1e-15);
}

TEST(FracStatistic, JDirectionReportsMeans)
{
    const auto& zeros = support::zeros500();
    ASSERT_EQ(zeros.size(), 269u);
    for (std::size_t n : {29u, 100u, 269u}) {
        const auto r = frac_statistic(zeros, support::primes(), Direction::J, 1, n);
        EXPECT_GE(r.diag("mean_frac"), 0.0);
        EXPECT_LT(r.diag("mean_frac"), 1.0);
        RecordProperty("mean_frac_j" + std::to_string(n), std::to_string(r.diag("mean_frac")));
    }
}

TEST(FracStatistic, Preconditions)
{
    const auto zeros = support::oracle_zero_records();
    EXPECT_EQ(kind_of([&] { frac_statistic(zeros, support::primes(), Direction::J, 1, 30); }), ErrorKind::Domain);
    EXPECT_EQ(kind_of([&] { frac_statistic(zeros, support::primes(), Direction::K, 30, 10); }), ErrorKind::Domain);
}

TEST(ReconstructLambda, LiteralFormula)
{
    const auto zeros = support::oracle_zero_records();
    const auto& t = support::primes();
    const std::size_t m = 1000;
    double floors = 0.0;
    for (std::size_t k = 1; k <= m; ++k)
        floors += std::floor(lambda1() * t.logs()[k - 1] / (2 * kPi));
    const double L = std::log(1000.0);
    const double expected = 2 * kPi * floors / (m * (L - 1)) + kPi / (L - 1);
    const auto r = reconstruct_lambda(1, zeros, t, m);
    EXPECT_NEAR(r.real(), expected, 1e-12);
    EXPECT_EQ(r.diag("truth"), lambda1());
    EXPECT_NEAR(r.diag("offset"), kPi / (L - 1), 1e-15);
}

TEST(ReconstructLambda, ErrorShrinksWithM)
{
    const auto zeros = support::oracle_zero_records();
    const double e4 = reconstruct_lambda(1, zeros, support::primes(), 10000).diag("error");
    const double e6 = reconstruct_lambda(1, zeros, support::primes(), 1000000).diag("error");
    EXPECT_LT(e6, e4);
}

TEST(ReconstructLambda, DegenerateSmallM)
{
    const auto r = reconstruct_lambda(1, support::oracle_zero_records(), support::primes(), 3);
    EXPECT_TRUE(std::isfinite(r.real()));
    EXPECT_TRUE(std::isfinite(r.diag("error")));
}

TEST(ReconstructLambda, BootstrapIsLabelled)
{
    const auto r = reconstruct_lambda(1, support::oracle_zero_records(), support::primes(), 10000, 3);
    EXPECT_EQ(r.diag("bootstrap"), 3.0);
    EXPECT_TRUE(std::isfinite(r.real()));
}

TEST(ReconstructPrime, ErrorShrinksWithMoreZeros)
{
    const auto& zeros = support::zeros500();
    const double e29 = reconstruct_prime(1, zeros, support::primes(), 29).diag("relative_error");
    const double e100 = reconstruct_prime(1, zeros, support::primes(), 100).diag("relative_error");
    const double e269 = reconstruct_prime(1, zeros, support::primes(), 269).diag("relative_error");
    EXPECT_LT(e100, e29);
    EXPECT_LT(e269, e100);
}

TEST(ReconstructPrime, FinitePositiveEstimate)
{
    const auto r = reconstruct_prime(4, support::zeros500(), support::primes(), 100);
    EXPECT_GT(r.real(), 0.0);
    EXPECT_TRUE(std::isfinite(r.real()));
    EXPECT_EQ(r.diag("truth"), 7.0);
    EXPECT_NEAR(r.diag("log_form"), std::log(r.real()), 1e-12);
    EXPECT_NEAR(r.diag("log_form"), r.diag("exponent") * std::log(100.0), 1e-12);
}

TEST(Distribution, ReferenceMassesAreExact)
{
    std::vector<double> angles{0.1, 0.2, 1.5, 3.0};
    const auto d = distribution_report(angles, 12);
    double emp = 0.0, ref = 0.0;
    for (std::size_t b = 0; b < 12; ++b) {
        emp += d.empirical[b];
        ref += d.reference[b];
        const double a = d.edges[b], c = d.edges[b + 1];
        const double closed = ((c - a) - (std::sin(c) * std::cos(c) - std::sin(a) * std::cos(a))) / kPi;
        EXPECT_NEAR(d.reference[b], closed, 1e-15);
    }
    EXPECT_NEAR(emp, 1.0, 1e-12);
    EXPECT_NEAR(ref, 1.0, 1e-12);
    EXPECT_EQ(d.sample_size, 4u);
}

TEST(Distribution, AnglesReducedModPi)
{
    const auto a = distribution_report({0.3, 1.2}, 10);
    const auto b = distribution_report({0.3 + kPi, 1.2 - 3 * kPi}, 10);
    EXPECT_EQ(a.empirical, b.empirical);
}

TEST(Distribution, UniformControlIsFar)
{
    std::mt19937 gen(42u);
    std::vector<double> angles(10000);
    for (double& a : angles)
        a = kPi * unit(gen);
    const auto d = distribution_report(angles, 50);
    EXPECT_GT(d.l1_cdf, 0.1);
}

TEST(Distribution, Sin2ControlIsClose)
{
    std::mt19937 gen(43u);
    std::vector<double> angles(100000);
    for (double& a : angles)
        a = sample_sin2(unit(gen));
    const auto d = distribution_report(angles, 50);
    EXPECT_LT(d.sup_cdf, 0.02);
}

TEST(Distribution, RealPairsReportOnly)
{
    const auto zeros = support::oracle_zero_records();
    const auto d = sato_tate_histogram(zeros, support::primes(), 29, 10000, 50, 1);
    EXPECT_EQ(d.sample_size, 290000u);
    RecordProperty("sup_cdf", std::to_string(d.sup_cdf));
    RecordProperty("l1_cdf", std::to_string(d.l1_cdf));
    const auto again = sato_tate_histogram(zeros, support::primes(), 29, 10000, 50, 4);
    EXPECT_EQ(d.empirical, again.empirical);
    EXPECT_EQ(kind_of([&] { sato_tate_histogram(zeros, support::primes(), 29, 100, 9, 1); }), ErrorKind::Domain);
}

TEST(FunctionEquation, WithHalfMeanNearZero)
{
    const auto zeros = support::oracle_zero_records();
    const auto r = function_equation_residual(zeros, support::primes(), 29, 10000, FunctionEquationVariant::WithHalf, 1);
    EXPECT_LT(std::fabs(r.diag("mean")), 0.01);
    EXPECT_EQ(r.diag("pairs"), 290000.0);
}

TEST(FunctionEquation, WithoutHalfMeanNearHalf)
{
    const auto zeros = support::oracle_zero_records();
    const auto r =
        function_equation_residual(zeros, support::primes(), 29, 10000, FunctionEquationVariant::WithoutHalf, 1);
    EXPECT_GE(r.diag("mean"), 0.45);
    EXPECT_LE(r.diag("mean"), 0.55);
    const auto h = function_equation_residual(zeros, support::primes(), 29, 10000, FunctionEquationVariant::WithHalf, 1);
    EXPECT_NEAR(r.real() - h.real(), 0.5 * 290000, 1e-6);
}

TEST(FunctionEquation, SinglePair)
{
    const auto zeros = support::oracle_zero_records();
    const double x = lambda1() * std::log(2.0) / (2 * kPi);
    const auto r = function_equation_residual(zeros, support::primes(), 1, 1, FunctionEquationVariant::WithHalf, 1);
    EXPECT_NEAR(r.real(), x - std::floor(x) - 0.5, 1e-15);
}

TEST(FunctionEquation, ThreadCountInvariant)
{
    const auto& zeros = support::zeros500();
    const auto a = function_equation_residual(zeros, support::primes(), 269, 5000, FunctionEquationVariant::WithHalf, 1);
    const auto b = function_equation_residual(zeros, support::primes(), 269, 5000, FunctionEquationVariant::WithHalf, 8);
    EXPECT_EQ(a.real(), b.real());
}

TEST(QuotientZeta, ClassicalValue)
{
    const auto r = quotient_zeta_f(Complex(2, 0));
    EXPECT_NEAR(r.real(), fixtures::kZeta4 / fixtures::kZeta2, 1e-12);
    EXPECT_NEAR(r.real(), kPi * kPi / 15, 1e-12);
    EXPECT_NEAR(r.diag("denominator_re"), fixtures::kZeta2, 1e-12);
}

TEST(QuotientZeta, ZeroAndPole)
{
    EXPECT_LT(std::abs(quotient_zeta_f(Complex(0.25, 0.5 * lambda1())).value), 0.05);
    EXPECT_GT(std::abs(quotient_zeta_f(Complex(0.5, lambda1() + 5e-5)).value), 100.0);
    EXPECT_EQ(kind_of([] { quotient_zeta_f(Complex(1, 0)); }), ErrorKind::Pole);
    EXPECT_EQ(kind_of([] { quotient_zeta_f(Complex(0.5, 0)); }), ErrorKind::Pole);
    EXPECT_EQ(kind_of([] { quotient_zeta_f(Complex(0.5, 1), [](Complex) { return Complex(0, 0); }); }),
              ErrorKind::Pole);
}

TEST(DirichletLambda, ClassicalValues)
{
    EXPECT_NEAR(dirichlet_lambda(2).real(), 0.75 * fixtures::kZeta2, 1e-12);
    EXPECT_NEAR(dirichlet_lambda(4).real(), 15.0 / 16.0 * fixtures::kZeta4, 1e-12);
    EXPECT_NEAR(dirichlet_lambda(2).real(), kPi * kPi / 8, 1e-12);
}

TEST(DirichletLambda, TwoFormsAgree)
{
    for (double n : {2.0, 3.0, 4.0, 6.0, 1.5}) {
        const auto r = dirichlet_lambda(n);
        EXPECT_LT(r.diag("difference"), 1e-10) << n;
        EXPECT_LT(*r.error_bound, 1e-12) << n;
    }
    EXPECT_EQ(kind_of([] { dirichlet_lambda(1.0); }), ErrorKind::Domain);
}

TEST(GProduct, Telescoping)
{
    const auto r = g_n_product(Complex(1.5, 0), 3);
    EXPECT_LT(r.diag("difference"), 1e-10);
    const double expected = std::real(zetalab::zeta(Complex(12, 0))) / fixtures::kZeta1p5;
    EXPECT_NEAR(r.real(), expected, 1e-10);
}

TEST(GProduct, TendsToReciprocalZeta)
{
    EXPECT_NEAR(g_n_product(Complex(1.5, 0), 20).real(), 1.0 / fixtures::kZeta1p5, 1e-10);
    EXPECT_NEAR(1.0 / fixtures::kZeta1p5, 0.382793, 1e-6);
}

TEST(GProduct, FirstFactorIsQuotient)
{
    for (Complex z : {Complex(1.5, 0), Complex(0.7, 3.0)})
        EXPECT_EQ(g_n_product(z, 1).value, quotient_zeta_f(z).value);
}

TEST(GProduct, ErrorsNameFactor)
{
    try {
        g_n_product(Complex(0.25, 0), 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Pole);
        EXPECT_NE(std::string(e.what()).find("k=2"), std::string::npos) << e.what();
    }
    EXPECT_EQ(kind_of([] { g_n_product(Complex(1.5, 0), 21); }), ErrorKind::Domain);
    EXPECT_EQ(kind_of([] { g_n_product(Complex(1.5, 0), 0); }), ErrorKind::Domain);
}
