#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/afe.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/primes.hpp"
#include "zetalab/series.hpp"

namespace zetalab {

enum class ZeroMethod { ScanBisect, FixedPoint };

std::string to_string(ZeroMethod m);
ZeroMethod parse_zero_method(const std::string& s);

/// One critical-line zero 1/2 + i lambda.
struct ZeroRecord {
    std::size_t index = 0; ///< 1-based, by increasing ordinate
    double lambda = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;
    double tol = 0.0; ///< achieved half-width (t_hi - t_lo) / 2
    ZeroMethod method = ZeroMethod::ScanBisect;

    bool operator==(const ZeroRecord&) const = default;
};

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

struct ScanResult {
    std::vector<Bracket> brackets;
    std::size_t points = 0;
    /// Set when the step exceeds the density safeguard (0.05 for t_max <= 100).
    std::optional<std::string> warning;
    std::optional<double> suggested_step;
};

/// Sign changes of Hardy's Z on t_i = t_min + i*step, 0 <= t_min < t_max.
/// Grid values are computed in fixed-size chunks so the result does not
/// depend on `threads`.
ScanResult scan_zeros(double t_min, double t_max, double step, unsigned threads = 0);
ScanResult scan_zeros(const HardyZ& z, double t_min, double t_max, double step, unsigned threads = 0);

/// Bisection on Z until the half-width is <= tol. Throws NoSignChange.
ZeroRecord refine_zero(const HardyZ& z, Bracket bracket, double tol);
ZeroRecord refine_zero(Bracket bracket, double tol);

/// Scan and refine every bracket; records are numbered from 1.
std::vector<ZeroRecord> find_zeros(double t_min, double t_max, double step, double tol, unsigned threads = 0);

/// One step of the damped fixed-point experiment.
struct FixedPointStep {
    std::size_t iteration = 0;
    double t = 0.0;
    Complex rhs;
    double delta = 0.0;
};

enum class FixedPointVerdict { Converged, MaxIterations, Diverged, Singular };

std::string to_string(FixedPointVerdict v);

struct FixedPointTrace {
    std::size_t n = 0;
    double t0 = 0.0;
    double damping = 1.0;
    std::size_t max_iter = 0;
    std::vector<FixedPointStep> steps;
    FixedPointVerdict verdict = FixedPointVerdict::MaxIterations;
    double final_t = 0.0;
};

class SingularStepError : public Error {
public:
    SingularStepError(FixedPointTrace trace, const std::string& what)
        : Error(ErrorKind::SingularStep, what), trace_(std::move(trace)) {}

    const FixedPointTrace& trace() const noexcept { return trace_; }

private:
    FixedPointTrace trace_;
};

/// Damped real iteration t <- (1-d) t + d Re(rhs) with
/// rhs = zeta_n(1/2+it)^{-1} sqrt(n / H(1/2-it)) (principal root).
/// Converged when |dt| < 1e-9; Diverged on a non-finite iterate.
/// Throws SingularStepError (carrying the trace) when |zeta_n| < 1e-12.
FixedPointTrace fixed_point_t(std::size_t n, double t0, double damping, std::size_t max_iter);

enum class OrderForm { Sum, Product };

/// sqrt(n / (zeta_n(1/2+it) zeta_n(1/2-it))) with zeta_n the partial sum
/// (Sum) or the Euler product over the first n primes (Product, needs table).
/// meta: radicand, radicand_imag (relative imaginary residual).
SeriesResult lambda_from_order(std::size_t n, double t, OrderForm form, const PrimeTable* table = nullptr);

/// Zero store, CSV with header j,lambda,t_lo,t_hi,tol,method.
void write_zeros(const std::vector<ZeroRecord>& records, std::ostream& out);
std::vector<ZeroRecord> read_zeros(std::istream& in);
void save_zeros(const std::vector<ZeroRecord>& records, const std::filesystem::path& path);
std::vector<ZeroRecord> load_zeros(const std::filesystem::path& path);

/// Writes then reads back through `path`.
std::vector<ZeroRecord> zero_store_roundtrip(const std::vector<ZeroRecord>& records,
                                             const std::filesystem::path& path);

} // namespace zetalab
