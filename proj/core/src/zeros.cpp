#include "zetalab/zeros.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "zetalab/parallel.hpp"
#include "zetalab/report.hpp"
#include "zetalab/zetasum.hpp"

namespace zetalab {

namespace {

constexpr std::size_t kScanChunk = 512;
constexpr const char* kZeroHeader = "j,lambda,t_lo,t_hi,tol,method";

double max_safe_step(double t_max)
{
    if (t_max <= 100.0)
        return 0.05;
    // Zero density grows like log(t / 2pi) / 2pi; keep the same margin as at t = 100.
    const double ref = std::log(100.0 / (2.0 * std::numbers::pi));
    return 0.05 * ref / std::log(t_max / (2.0 * std::numbers::pi));
}

double parse_double(const std::string& field, std::size_t line, const char* name)
{
    double v = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw ParseError(line, std::string("bad ") + name + " value '" + field + "'");
    return v;
}

} // namespace

std::string to_string(ZeroMethod m) { return m == ZeroMethod::ScanBisect ? "scan-bisect" : "fixed-point"; }

ZeroMethod parse_zero_method(const std::string& s)
{
    if (s == "scan-bisect")
        return ZeroMethod::ScanBisect;
    if (s == "fixed-point")
        return ZeroMethod::FixedPoint;
    throw Error(ErrorKind::Parse, "unknown zero method '" + s + "'");
}

std::string to_string(FixedPointVerdict v)
{
    switch (v) {
    case FixedPointVerdict::Converged: return "converged";
    case FixedPointVerdict::MaxIterations: return "max-iterations";
    case FixedPointVerdict::Diverged: return "diverged";
    case FixedPointVerdict::Singular: return "singular";
    }
    return "unknown";
}

ScanResult scan_zeros(const HardyZ& z, double t_min, double t_max, double step, unsigned threads)
{
    if (!(t_min >= 0.0 && t_max > t_min))
        throw Error(ErrorKind::Domain, "scan needs 0 <= t_min < t_max");
    if (!(step > 0.0))
        throw Error(ErrorKind::Domain, "scan step must be positive");
    if (t_max > z.curve().t_max())
        throw Error(ErrorKind::Domain, "scan range exceeds the phase curve");

    ScanResult result;
    const double safe = max_safe_step(t_max);
    if (step > safe) {
        result.warning = "step " + format_double(step) + " may merge close zeros; suggested step <= " +
                         format_double(safe);
        result.suggested_step = safe;
    }

    const auto count = static_cast<std::size_t>(std::floor((t_max - t_min) / step + 1e-9)) + 1;
    result.points = count;
    std::vector<double> values(count);
    const std::size_t chunks = (count + kScanChunk - 1) / kScanChunk;
    parallel_for(chunks, threads, [&](std::size_t c) {
        const std::size_t end = std::min(count, (c + 1) * kScanChunk);
        for (std::size_t i = c * kScanChunk; i < end; ++i)
            values[i] = z(t_min + static_cast<double>(i) * step);
    });

    for (std::size_t i = 0; i + 1 < count; ++i)
        if ((values[i] < 0.0) != (values[i + 1] < 0.0))
            result.brackets.push_back({t_min + static_cast<double>(i) * step,
                                       t_min + static_cast<double>(i + 1) * step});
    return result;
}

ScanResult scan_zeros(double t_min, double t_max, double step, unsigned threads)
{
    return scan_zeros(HardyZ(t_max), t_min, t_max, step, threads);
}

ZeroRecord refine_zero(const HardyZ& z, Bracket bracket, double tol)
{
    if (!(tol > 0.0))
        throw Error(ErrorKind::Domain, "tolerance must be positive");
    double lo = bracket.lo, hi = bracket.hi;
    double zlo = z(lo);
    const double zhi = z(hi);
    if (!(zlo * zhi < 0.0))
        throw Error(ErrorKind::NoSignChange,
                    "Z does not change sign on [" + format_double(lo) + ", " + format_double(hi) + "]");
    for (int iter = 0; iter < 200 && 0.5 * (hi - lo) > tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double zm = z(mid);
        if ((zm < 0.0) == (zlo < 0.0)) {
            lo = mid;
            zlo = zm;
        } else {
            hi = mid;
        }
    }
    ZeroRecord rec;
    rec.lambda = 0.5 * (lo + hi);
    rec.t_lo = lo;
    rec.t_hi = hi;
    rec.tol = 0.5 * (hi - lo);
    rec.method = ZeroMethod::ScanBisect;
    return rec;
}

ZeroRecord refine_zero(Bracket bracket, double tol) { return refine_zero(HardyZ(bracket.hi), bracket, tol); }

std::vector<ZeroRecord> find_zeros(double t_min, double t_max, double step, double tol, unsigned threads)
{
    const HardyZ z(t_max);
    const ScanResult scan = scan_zeros(z, t_min, t_max, step, threads);
    std::vector<ZeroRecord> records(scan.brackets.size());
    parallel_for(records.size(), threads, [&](std::size_t i) {
        records[i] = refine_zero(z, scan.brackets[i], tol);
        records[i].index = i + 1;
    });
    return records;
}

FixedPointTrace fixed_point_t(std::size_t n, double t0, double damping, std::size_t max_iter)
{
    if (n == 0)
        throw Error(ErrorKind::Domain, "fixed-point iteration needs n >= 1");
    if (!(t0 > 0.0))
        throw Error(ErrorKind::Domain, "fixed-point iteration needs t0 > 0");
    if (!(damping > 0.0 && damping <= 1.0))
        throw Error(ErrorKind::Domain, "damping must lie in (0, 1]");

    FixedPointTrace trace;
    trace.n = n;
    trace.t0 = t0;
    trace.damping = damping;
    trace.max_iter = max_iter;
    trace.final_t = t0;

    double t = t0;
    const Complex root_n(std::sqrt(static_cast<double>(n)), 0.0);
    for (std::size_t iter = 1; iter <= max_iter; ++iter) {
        const Complex zn = zeta_partial_sum(Complex(0.5, t), n).value;
        if (std::hypot(zn.real(), zn.imag()) < 1e-12) {
            trace.verdict = FixedPointVerdict::Singular;
            throw SingularStepError(trace, "zeta_n vanishes at t=" + format_double(t));
        }
        const Complex h = H(Complex(0.5, -t));
        const Complex rhs = cdiv(cmul(root_n, csqrt(cdiv(Complex(1.0, 0.0), h))), zn);
        const double next = (1.0 - damping) * t + damping * rhs.real();
        FixedPointStep step{iter, next, rhs, std::fabs(next - t)};
        trace.steps.push_back(step);
        if (!std::isfinite(next)) {
            trace.verdict = FixedPointVerdict::Diverged;
            return trace;
        }
        t = next;
        trace.final_t = t;
        if (step.delta < 1e-9) {
            trace.verdict = FixedPointVerdict::Converged;
            return trace;
        }
    }
    trace.verdict = FixedPointVerdict::MaxIterations;
    return trace;
}

SeriesResult lambda_from_order(std::size_t n, double t, OrderForm form, const PrimeTable* table)
{
    Complex upper, lower;
    if (form == OrderForm::Sum) {
        upper = zeta_partial_sum(Complex(0.5, t), n).value;
        lower = zeta_partial_sum(Complex(0.5, -t), n).value;
    } else {
        if (table == nullptr)
            throw Error(ErrorKind::Domain, "product form needs a prime table");
        upper = euler_product_partial(Complex(0.5, t), *table, n).value;
        lower = euler_product_partial(Complex(0.5, -t), *table, n).value;
    }
    const Complex radicand = cmul(upper, lower);
    const double modulus = std::hypot(radicand.real(), radicand.imag());
    if (modulus == 0.0 || !std::isfinite(modulus))
        throw Error(ErrorKind::Domain, "zeta_n(1/2+it) zeta_n(1/2-it) is zero or not finite");

    SeriesResult r;
    r.value = std::sqrt(static_cast<double>(n) / radicand.real());
    r.truncation = n;
    r.meta["radicand"] = radicand.real();
    r.meta["radicand_imag"] = std::fabs(radicand.imag()) / modulus;
    r.meta["abs_zeta_n"] = std::hypot(upper.real(), upper.imag());
    return r;
}

void write_zeros(const std::vector<ZeroRecord>& records, std::ostream& out)
{
    std::string buf = std::string(kZeroHeader) + '\n';
    for (const auto& r : records) {
        buf += std::to_string(r.index) + ',' + format_double(r.lambda) + ',' + format_double(r.t_lo) + ',' +
               format_double(r.t_hi) + ',' + format_double(r.tol) + ',' + to_string(r.method) + '\n';
    }
    out << buf;
    if (!out)
        throw Error(ErrorKind::Io, "failed writing zero store");
}

std::vector<ZeroRecord> read_zeros(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != kZeroHeader)
        throw ParseError(1, std::string("expected header '") + kZeroHeader + "'");
    std::vector<ZeroRecord> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> f;
        std::string field;
        std::istringstream ss(line);
        while (std::getline(ss, field, ','))
            f.push_back(field);
        if (f.size() != 6)
            throw ParseError(lineno, "expected 6 fields, got " + std::to_string(f.size()));
        ZeroRecord r;
        std::size_t index = 0;
        const auto* end = f[0].data() + f[0].size();
        const auto [ptr, ec] = std::from_chars(f[0].data(), end, index);
        if (ec != std::errc() || ptr != end || index == 0)
            throw ParseError(lineno, "bad index '" + f[0] + "'");
        r.index = index;
        r.lambda = parse_double(f[1], lineno, "lambda");
        r.t_lo = parse_double(f[2], lineno, "t_lo");
        r.t_hi = parse_double(f[3], lineno, "t_hi");
        r.tol = parse_double(f[4], lineno, "tol");
        try {
            r.method = parse_zero_method(f[5]);
        } catch (const Error&) {
            throw ParseError(lineno, "unknown method '" + f[5] + "'");
        }
        out.push_back(r);
    }
    return out;
}

void save_zeros(const std::vector<ZeroRecord>& records, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
    write_zeros(records, out);
}

std::vector<ZeroRecord> load_zeros(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Io, "cannot open " + path.string());
    return read_zeros(in);
}

std::vector<ZeroRecord> zero_store_roundtrip(const std::vector<ZeroRecord>& records,
                                             const std::filesystem::path& path)
{
    save_zeros(records, path);
    return load_zeros(path);
}

} // namespace zetalab
