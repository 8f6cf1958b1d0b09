#include "zetalab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zetalab/compensated.hpp"
#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

constexpr std::uint64_t kSegment = 1u << 20;

std::vector<std::uint64_t> simple_sieve(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    if (limit < 2)
        return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return out;
}

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

void check_index(const PrimeTable& table, std::size_t m)
{
    if (m == 0 || m > table.count())
        throw Error(ErrorKind::Domain,
                    "prime index m=" + std::to_string(m) + " outside table of " + std::to_string(table.count()));
}

} // namespace

std::uint64_t nth_prime_upper_bound(std::size_t m) noexcept
{
    if (m < 6)
        return 13;
    const double x = static_cast<double>(m);
    return static_cast<std::uint64_t>(std::ceil(x * (std::log(x) + std::log(std::log(x))))) + 1;
}

std::vector<std::uint64_t> sieve_range(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    if (hi <= lo || hi <= 2)
        return out;
    lo = std::max<std::uint64_t>(lo, 2);
    const auto base = simple_sieve(isqrt(hi - 1));
    std::vector<char> composite;
    for (std::uint64_t seg = lo; seg < hi; seg += kSegment) {
        const std::uint64_t end = std::min(hi, seg + kSegment);
        composite.assign(end - seg, 0);
        for (std::uint64_t p : base) {
            if (p * p >= end)
                break;
            std::uint64_t start = std::max(p * p, (seg + p - 1) / p * p);
            for (std::uint64_t j = start; j < end; j += p)
                composite[j - seg] = 1;
        }
        for (std::uint64_t i = seg; i < end; ++i)
            if (!composite[i - seg])
                out.push_back(i);
    }
    return out;
}

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

double PrimeTable::prefix(const std::vector<double>& v, std::size_t m)
{
    if (m == 0)
        return 0.0;
    return v.at(m - 1);
}

PrimeTable build_prime_table(std::size_t m, std::size_t budget)
{
    if (m == 0)
        throw Error(ErrorKind::Domain, "prime table needs m >= 1");
    if (m > budget)
        throw Error(ErrorKind::Capacity,
                    "prime table of " + std::to_string(m) + " entries exceeds budget " + std::to_string(budget));

    PrimeTable table;
    std::uint64_t window = nth_prime_upper_bound(m) + 1;
    std::uint64_t lo = 2;
    auto& primes = table.primes_;
    primes.reserve(m);
    while (primes.size() < m) {
        for (std::uint64_t p : sieve_range(lo, window)) {
            primes.push_back(p);
            if (primes.size() == m)
                break;
        }
        lo = window;
        window *= 2;
    }

    table.logs_.resize(m);
    table.log_prefix_.resize(m);
    table.recip_prefix_.resize(m);
    table.recip_sqrt_prefix_.resize(m);
    CompensatedSum log_acc, recip_acc, recip_sqrt_acc;
    for (std::size_t i = 0; i < m; ++i) {
        const double p = static_cast<double>(primes[i]);
        table.logs_[i] = std::log(p);
        log_acc += table.logs_[i];
        recip_acc += 1.0 / p;
        recip_sqrt_acc += 1.0 / std::sqrt(p);
        table.log_prefix_[i] = log_acc.value();
        table.recip_prefix_[i] = recip_acc.value();
        table.recip_sqrt_prefix_[i] = recip_sqrt_acc.value();
    }
    return table;
}

SeriesResult mertens_product(const PrimeTable& table, std::size_t m)
{
    check_index(table, m);
    CompensatedSum log_acc;
    for (std::size_t i = 0; i < m; ++i)
        log_acc += std::log1p(-1.0 / static_cast<double>(table.primes()[i]));

    SeriesResult r;
    r.truncation = m;
    const double log_value = log_acc.value();
    r.value = std::exp(log_value);
    const double ratio = r.real() * table.logs()[m - 1];
    const double target = std::exp(-std::numbers::egamma);
    r.meta["log_value"] = log_value;
    r.meta["mertens_ratio"] = ratio;
    r.meta["deviation"] = ratio - target;
    r.meta["scale"] = 1.0 / std::sqrt(static_cast<double>(table.prime(m)));
    return r;
}

SeriesResult plus_product(const PrimeTable& table, std::size_t m)
{
    check_index(table, m);
    CompensatedSum log_acc;
    for (std::size_t i = 0; i < m; ++i)
        log_acc += std::log1p(1.0 / static_cast<double>(table.primes()[i]));

    SeriesResult r;
    r.truncation = m;
    const double log_value = log_acc.value();
    r.value = std::exp(log_value);
    const double log_pm = table.logs()[m - 1];
    const double c = r.real() / log_pm;
    const double lo = 6.0 * std::exp(std::numbers::egamma) / (std::numbers::pi * std::numbers::pi);
    const double hi = std::exp(std::numbers::egamma);
    r.meta["log_value"] = log_value;
    r.meta["loglog_pm"] = std::log(log_pm);
    r.meta["C"] = c;
    r.meta["bracket_lo"] = lo;
    r.meta["bracket_hi"] = hi;
    r.meta["bracket_position"] = (c - lo) / (hi - lo);
    return r;
}

SeriesResult recip_sqrt_sum_asymptotic(const PrimeTable& table, std::size_t m)
{
    check_index(table, m);
    SeriesResult r;
    r.truncation = m;
    const double s = table.recip_sqrt_sum(m);
    const double leading = 2.0 * std::sqrt(static_cast<double>(m));
    r.value = s;
    r.meta["leading"] = leading;
    r.meta["residual"] = s - leading;
    r.meta["residual_over_sqrt_m"] = (s - leading) / std::sqrt(static_cast<double>(m));
    return r;
}

} // namespace zetalab
