#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "fixtures/oracle_values.hpp"
#include "zetalab/primes.hpp"
#include "zetalab/zeros.hpp"

namespace support {

inline double rel_err(std::complex<double> a, std::complex<double> b)
{
    return std::abs(a - b) / std::abs(b);
}

/// First million primes, built once per process.
inline const zetalab::PrimeTable& primes()
{
    static const zetalab::PrimeTable table = zetalab::build_prime_table(1'000'000);
    return table;
}

/// Zeros below 500 from the library's scan, computed once per process.
inline const std::vector<zetalab::ZeroRecord>& zeros500()
{
    static const std::vector<zetalab::ZeroRecord> z = zetalab::find_zeros(0.0, 500.0, 0.05, 1e-10, 1);
    return z;
}

/// Oracle zeros below 100 as records (tight brackets around the oracle value).
inline std::vector<zetalab::ZeroRecord> oracle_zero_records()
{
    std::vector<zetalab::ZeroRecord> out;
    std::size_t j = 1;
    for (double l : fixtures::kZerosBelow100)
        out.push_back({j++, l, l - 1e-12, l + 1e-12, 1e-12, zetalab::ZeroMethod::ScanBisect});
    return out;
}

inline double lambda1() { return fixtures::kZerosBelow100[0]; }

} // namespace support
