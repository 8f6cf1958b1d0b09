// Regenerates oracle_values.hpp:
//   cmake --build build --target generate_oracle_values
//   ./build/tests/generate_oracle_values > tests/fixtures/oracle_values.hpp

#include <cstdio>
#include <random>
#include <string>

#include "oracle/oracle.hpp"

namespace {

std::string str(const oracle::Real& x)
{
    return x.str(20, std::ios_base::scientific);
}

} // namespace

int main()
{
    using oracle::Real;
    const Real half = Real(1) / 2;

    std::printf("#pragma once\n\n");
    std::printf("// Generated by generate_oracle_values (tests/fixtures); do not edit.\n\n");
    std::printf("#include <array>\n#include <cstdint>\n\nnamespace fixtures {\n\n");

    std::printf("inline constexpr double kEulerGamma = %s;\n", str(oracle::euler_gamma()).c_str());
    const auto z2 = oracle::zeta(Real(2), Real(0));
    const auto z4 = oracle::zeta(Real(4), Real(0));
    std::printf("inline constexpr double kZeta2 = %s;\n", str(z2.re).c_str());
    std::printf("inline constexpr double kZeta4 = %s;\n", str(z4.re).c_str());
    // zeta(-1) = 2^-1 pi^-2 sin(-pi/2) Gamma(2) zeta(2)
    std::printf("inline constexpr double kZetaMinus1 = %s;\n", str(-z2.re / (2 * oracle::pi() * oracle::pi())).c_str());
    std::printf("inline constexpr double kZetaHalf = %s;\n", str(oracle::zeta(half, Real(0)).re).c_str());
    std::printf("inline constexpr double kZeta1p5 = %s;\n", str(oracle::zeta(Real(3) / 2, Real(0)).re).c_str());
    std::printf("inline constexpr double kZeta3 = %s;\n", str(oracle::zeta(Real(3), Real(0)).re).c_str());
    const auto z20 = oracle::zeta(half, Real(20));
    std::printf("inline constexpr double kZetaHalf20Re = %s;\n", str(z20.re).c_str());
    std::printf("inline constexpr double kZetaHalf20Im = %s;\n\n", str(z20.im).c_str());

    std::printf("struct StripValue {\n    double re, im, zeta_re, zeta_im;\n};\n\n");
    std::printf("// mt19937 seed 20240601, sigma in [0.1, 0.9], t in [0, 50]\n");
    std::printf("inline constexpr std::array<StripValue, 100> kStrip = {{\n");
    std::mt19937 gen(20240601u);
    for (int i = 0; i < 100; ++i) {
        const auto [sigma, t] = oracle::strip_point(gen);
        const auto z = oracle::zeta(Real(sigma), Real(t));
        std::printf("    {%.17g, %.17g, %s, %s},\n", sigma, t, str(z.re).c_str(), str(z.im).c_str());
    }
    std::printf("}};\n\n");

    const auto zeros = oracle::hardy_zeros(100.0, 0.05, 1e-15);
    std::printf("inline constexpr std::array<double, %zu> kZerosBelow100 = {{\n", zeros.size());
    for (const auto& z : zeros)
        std::printf("    %s,\n", str(z).c_str());
    std::printf("}};\n\n");

    const Real pi = oracle::pi();
    std::printf("// theta(t) crossings of -pi (first two) and of 0 (first positive)\n");
    std::printf("inline constexpr double kThetaMinusPiFirst = %s;\n",
                str(oracle::theta_crossing(-pi, 0.5, 8.0)).c_str());
    std::printf("inline constexpr double kThetaMinusPiSecond = %s;\n",
                str(oracle::theta_crossing(-pi, 8.0, 14.0)).c_str());
    std::printf("inline constexpr double kThetaZero = %s;\n", str(oracle::theta_crossing(Real(0), 10.0, 20.0)).c_str());
    std::printf("inline constexpr double kThetaAt50 = %s;\n\n", str(oracle::theta(Real(50))).c_str());

    std::printf("struct Fraction {\n    std::int64_t num, den;\n};\n\n");
    std::printf("// B_0, B_2, ..., B_30\n");
    const auto B = oracle::bernoulli_akiyama_tanigawa(30);
    std::printf("inline constexpr std::array<Fraction, 16> kBernoulliEven = {{\n");
    for (int n = 0; n <= 30; n += 2)
        std::printf("    {%s, %s},\n", numerator(B[n]).str().c_str(), denominator(B[n]).str().c_str());
    std::printf("}};\n\n");

    std::printf("} // namespace fixtures\n");
}
