#include "cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetalab/afe.hpp"
#include "zetalab/duality.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/eulermac.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/primes.hpp"
#include "zetalab/report.hpp"
#include "zetalab/zeros.hpp"
#include "zetalab/zetasum.hpp"

namespace zetalab::cli {

namespace {

// Flag combinations CLI11 cannot express; reported like parse errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    unsigned threads = 0;
    std::string out;
    std::string emit;

    // primes
    std::size_t count = 100;

    // zeta eval
    std::string form = "em";
    std::optional<double> re, im, s, t;
    std::optional<std::size_t> n;
    std::optional<std::size_t> M;
    std::optional<int> k;
    std::optional<double> tol;

    // grids
    double alpha = 0.5;
    double tmin = 0.0;
    std::optional<double> tmax;
    std::optional<double> step;

    // zeros fixedpoint
    double t0 = 14.0;
    double damping = 0.5;
    std::size_t max_iter = 100;

    // duality
    std::string zeros_path;
    double height = 500.0;
    std::string direction = "k";
    std::size_t j = 1;
    std::optional<std::size_t> m;
    std::size_t bins = 50;
    std::size_t bootstrap = 0;
    std::string variant = "both";
};

struct Output {
    ExperimentReport report;
    std::string text; // preformatted payload (used when report is not tabular)
    bool raw = false;
    bool sidecar = true;
};

std::string one_line(std::string s)
{
    std::replace(s.begin(), s.end(), '\n', ' ');
    std::replace(s.begin(), s.end(), '\r', ' ');
    return s;
}

ExperimentReport make_report(const std::string& name)
{
    ExperimentReport r;
    r.name = name;
    r.set("version", std::string(kVersion));
    return r;
}

Cell bound_cell(const SeriesResult& r)
{
    if (r.error_bound)
        return *r.error_bound;
    return std::string("none");
}

// One row per result: value, truncation, bound, then every diagnostic.
void append_result(ExperimentReport& rep, const SeriesResult& r, std::vector<Cell> lead)
{
    if (rep.rows.empty()) {
        for (const char* c : {"value_re", "value_im", "truncation", "error_bound"})
            rep.columns.emplace_back(c);
        for (const auto& [key, _] : r.meta)
            rep.columns.push_back(key);
    }
    std::vector<Cell> row = std::move(lead);
    row.emplace_back(r.value.real());
    row.emplace_back(r.value.imag());
    row.emplace_back(static_cast<std::int64_t>(r.truncation));
    row.push_back(bound_cell(r));
    for (const auto& [_, v] : r.meta)
        row.emplace_back(v);
    rep.rows.push_back(std::move(row));
}

PrimeTable primes_for(std::size_t m) { return build_prime_table(std::max<std::size_t>(m, 1)); }

std::vector<ZeroRecord> zero_inventory(const Options& o)
{
    if (!o.zeros_path.empty())
        return load_zeros(o.zeros_path);
    return find_zeros(0.0, o.height, o.step.value_or(0.05), 1e-10, o.threads);
}

std::size_t or_all(std::optional<std::size_t> v, std::size_t all) { return v && *v > 0 ? *v : all; }

Output cmd_primes(const Options& o)
{
    Output out;
    auto& rep = out.report = make_report("primes");
    rep.set("count", static_cast<std::int64_t>(o.count));
    const PrimeTable table = build_prime_table(o.count);
    rep.columns = {"k", "p_k", "recip_prefix", "recip_sqrt_prefix"};
    rep.rows.reserve(o.count);
    for (std::size_t k = 1; k <= o.count; ++k)
        rep.rows.push_back({static_cast<std::int64_t>(k), static_cast<std::int64_t>(table.prime(k)),
                            table.recip_sum(k), table.recip_sqrt_sum(k)});
    return out;
}

Output cmd_zeta_eval(const Options& o)
{
    Output out;
    auto& rep = out.report = make_report("zeta-eval");
    rep.set("form", o.form);

    Complex z;
    if (o.s) {
        if (o.re || o.im)
            throw UsageError("give either --re/--im or --s/--t");
        z = Complex(0.5 * *o.s, *o.s * o.t.value_or(0.0));
        rep.set("s", *o.s);
        rep.set("t", o.t.value_or(0.0));
    } else {
        if (o.t)
            throw UsageError("--t needs --s");
        if (o.form == "fstd")
            throw UsageError("--form fstd needs --s and --t");
        z = Complex(o.re.value_or(0.0), o.im.value_or(0.0));
    }
    rep.set("re", z.real());
    rep.set("im", z.imag());

    const std::size_t n = o.n.value_or(1000);
    SeriesResult r;
    if (o.form == "sum") {
        rep.set("n", static_cast<std::int64_t>(n));
        r = zeta_partial_sum(z, n);
    } else if (o.form == "eta") {
        const double tol = o.tol.value_or(1e-12);
        rep.set("tol", tol);
        r = zeta_eta_regularized(z, tol);
    } else if (o.form == "product") {
        rep.set("n", static_cast<std::int64_t>(n));
        r = euler_product_partial(z, primes_for(n), n);
    } else if (o.form == "fstd") {
        rep.set("n", static_cast<std::int64_t>(n));
        r = standard_form_f(*o.s, o.t.value_or(0.0), primes_for(n), n);
    } else if (o.form == "em") {
        EMConfig cfg = (o.M || o.k) ? base_em_config(z) : choose_em_config(z);
        if (o.M)
            cfg.M = *o.M;
        if (o.k)
            cfg.k = *o.k;
        rep.set("M", static_cast<std::int64_t>(cfg.M));
        rep.set("k", static_cast<std::int64_t>(cfg.k));
        r = zeta_euler_maclaurin(z, cfg);
    } else {
        rep.set("n", static_cast<std::int64_t>(n));
        r = afe_eval(z, n);
    }
    rep.columns = {"re", "im"};
    append_result(rep, r, {z.real(), z.imag()});
    return out;
}

Output cmd_superpose(const Options& o)
{
    const std::size_t n = o.n.value_or(10000);
    const PrimeTable table = primes_for(n);
    const UniformGrid grid = UniformGrid::span(o.tmin, o.tmax.value_or(50.0), o.step.value_or(0.01));
    Output out;
    out.report = cosine_superposition(o.alpha, table, n, grid, o.threads);
    return out;
}

Output cmd_ztable(const Options& o)
{
    const double tmax = o.tmax.value_or(50.0);
    if (o.tmin < 0.0)
        throw UsageError("--tmin must be >= 0");
    const UniformGrid grid = UniformGrid::span(o.tmin, tmax, o.step.value_or(0.01));
    const HardyZ hz(std::max(tmax, grid.at(grid.count - 1)));
    std::vector<double> theta(grid.count), values(grid.count);
    parallel_for(grid.count, o.threads, [&](std::size_t i) {
        const double t = grid.at(i);
        theta[i] = hz.curve().at(t);
        values[i] = hz(t);
    });

    Output out;
    auto& rep = out.report = make_report("ztable");
    rep.set("t_min", o.tmin);
    rep.set("t_max", tmax);
    rep.set("step", grid.step);
    rep.set("evaluator", std::string("euler-maclaurin auto"));
    rep.columns = {"t", "theta", "Z"};
    for (std::size_t i = 0; i < grid.count; ++i)
        rep.rows.push_back({grid.at(i), theta[i], values[i]});
    return out;
}

Output cmd_zeros_scan(const Options& o)
{
    const double tmax = o.tmax.value_or(100.0);
    const double step = o.step.value_or(0.05);
    const double tol = o.tol.value_or(1e-10);
    const auto zeros = find_zeros(o.tmin, tmax, step, tol, o.threads);

    Output out;
    auto& rep = out.report = make_report("zeros-scan");
    rep.set("t_min", o.tmin);
    rep.set("t_max", tmax);
    rep.set("step", step);
    rep.set("tol", tol);
    rep.columns = {"j", "lambda", "t_lo", "t_hi", "tol", "method"};
    for (const auto& z : zeros)
        rep.rows.push_back({static_cast<std::int64_t>(z.index), z.lambda, z.t_lo, z.t_hi, z.tol,
                            to_string(z.method)});
    return out;
}

std::string trace_json(const FixedPointTrace& tr, const Options& o)
{
    nlohmann::ordered_json j;
    j["experiment"] = "zeros-fixedpoint";
    j["manifest"] = {{"version", kVersion},   {"n", tr.n},           {"t0", format_double(tr.t0)},
                     {"damping", format_double(tr.damping)}, {"max_iter", tr.max_iter},
                     {"projection", "damped real part"}};
    (void)o;
    j["verdict"] = to_string(tr.verdict);
    j["final_t"] = format_double(tr.final_t);
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : tr.steps)
        steps.push_back({{"iteration", s.iteration},
                         {"t", format_double(s.t)},
                         {"rhs_re", format_double(s.rhs.real())},
                         {"rhs_im", format_double(s.rhs.imag())},
                         {"delta", format_double(s.delta)}});
    j["steps"] = std::move(steps);
    return j.dump(2) + "\n";
}

Output cmd_zeros_fixedpoint(const Options& o)
{
    Output out;
    out.raw = true;
    out.sidecar = false;
    out.text = trace_json(fixed_point_t(o.n.value_or(1000), o.t0, o.damping, o.max_iter), o);
    return out;
}

ExperimentReport duality_report(const std::string& name, const Options& o, std::size_t zero_count)
{
    auto rep = make_report("duality-" + name);
    if (o.zeros_path.empty()) {
        rep.set("zeros", std::string("scan"));
        rep.set("height", o.height);
    } else {
        rep.set("zeros", o.zeros_path);
    }
    rep.set("zero_count", static_cast<std::int64_t>(zero_count));
    return rep;
}

Output cmd_duality(const std::string& which, const Options& o)
{
    const auto zeros = zero_inventory(o);
    Output out;
    auto& rep = out.report = duality_report(which, o, zeros.size());

    if (which == "frac") {
        Direction dir;
        std::size_t fixed = o.j, count;
        if (o.direction == "k") {
            dir = Direction::K;
            count = o.m.value_or(100000);
        } else if (o.direction == "j") {
            dir = Direction::J;
            fixed = o.k.has_value() ? static_cast<std::size_t>(*o.k) : 1;
            count = or_all(o.n, zeros.size());
        } else {
            throw UsageError("--direction must be k or j");
        }
        const PrimeTable table = primes_for(dir == Direction::K ? count : fixed);
        rep.set("direction", o.direction);
        rep.set("fixed_index", static_cast<std::int64_t>(fixed));
        rep.set("count", static_cast<std::int64_t>(count));
        rep.columns = {};
        append_result(rep, frac_statistic(zeros, table, dir, fixed, count), {});
    } else if (which == "reconstruct-lambda") {
        const std::size_t m = o.m.value_or(100000);
        rep.set("j", static_cast<std::int64_t>(o.j));
        rep.set("m", static_cast<std::int64_t>(m));
        rep.set("bootstrap", static_cast<std::int64_t>(o.bootstrap));
        append_result(rep, reconstruct_lambda(o.j, zeros, primes_for(m), m, o.bootstrap), {});
    } else if (which == "reconstruct-prime") {
        const std::size_t k = o.k.has_value() ? static_cast<std::size_t>(*o.k) : 1;
        const std::size_t n = or_all(o.n, zeros.size());
        rep.set("k", static_cast<std::int64_t>(k));
        rep.set("n", static_cast<std::int64_t>(n));
        append_result(rep, reconstruct_prime(k, zeros, primes_for(k), n), {});
    } else if (which == "histogram") {
        const std::size_t n = or_all(o.n, zeros.size());
        const std::size_t m = o.m.value_or(10000);
        const auto d = sato_tate_histogram(zeros, primes_for(m), n, m, o.bins, o.threads);
        rep.set("j_count", static_cast<std::int64_t>(n));
        rep.set("k_count", static_cast<std::int64_t>(m));
        rep.set("bins", static_cast<std::int64_t>(o.bins));
        rep.set("sample_size", static_cast<std::int64_t>(d.sample_size));
        rep.set("sup_cdf", d.sup_cdf);
        rep.set("l1_cdf", d.l1_cdf);
        rep.columns = {"theta_lo", "theta_hi", "empirical", "reference"};
        for (std::size_t b = 0; b < d.empirical.size(); ++b)
            rep.rows.push_back({d.edges[b], d.edges[b + 1], d.empirical[b], d.reference[b]});
    } else {
        const std::size_t n = or_all(o.n, zeros.size());
        const std::size_t m = o.m.value_or(10000);
        std::vector<std::pair<std::string, FunctionEquationVariant>> variants;
        if (o.variant == "both" || o.variant == "with-half")
            variants.emplace_back("with-half", FunctionEquationVariant::WithHalf);
        if (o.variant == "both" || o.variant == "without-half")
            variants.emplace_back("without-half", FunctionEquationVariant::WithoutHalf);
        if (variants.empty())
            throw UsageError("--variant must be with-half, without-half or both");
        const PrimeTable table = primes_for(m);
        rep.set("M", static_cast<std::int64_t>(n));
        rep.set("N", static_cast<std::int64_t>(m));
        rep.columns = {"variant", "sum", "mean", "pairs"};
        for (const auto& [label, v] : variants) {
            const auto r = function_equation_residual(zeros, table, n, m, v, o.threads);
            rep.rows.push_back({label, r.real(), r.diag("mean"), static_cast<std::int64_t>(r.diag("pairs"))});
        }
    }
    return out;
}

void render(const Output& result, const Options& o, const std::string& default_emit, std::ostream& out)
{
    std::ostringstream payload;
    const std::string emit = o.emit.empty() ? default_emit : o.emit;
    if (result.raw)
        payload << result.text;
    else if (emit == "json")
        write_json(result.report, payload);
    else
        write_csv(result.report, payload);

    if (o.out.empty()) {
        out << payload.str();
        out.flush();
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file)
        throw Error(ErrorKind::Io, "cannot open " + o.out + " for writing");
    file << payload.str();
    file.close();
    if (!file)
        throw Error(ErrorKind::Io, "failed writing " + o.out);

    if (!result.raw && result.sidecar && emit == "csv") {
        std::ofstream side(o.out + ".manifest.json", std::ios::binary);
        if (!side)
            throw Error(ErrorKind::Io, "cannot open " + o.out + ".manifest.json for writing");
        write_manifest_json(result.report, side);
        if (!side)
            throw Error(ErrorKind::Io, "failed writing " + o.out + ".manifest.json");
    }
}

void add_common(CLI::App* app, Options& o, bool with_emit)
{
    app->add_option("--threads", o.threads, "Worker threads (0 = machine parallelism)");
    app->add_option("--out", o.out, "Write the report to this file");
    if (with_emit)
        app->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Numerical experiments around the Riemann zeta function", "zetalab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    auto* primes = app.add_subcommand("primes", "Prime table with prefix sums");
    add_common(primes, o, true);
    primes->add_option("--count", o.count, "Number of primes")->check(CLI::PositiveNumber);

    auto* zeta = app.add_subcommand("zeta", "Zeta evaluators");
    zeta->require_subcommand(1);
    auto* eval = zeta->add_subcommand("eval", "Evaluate one form of zeta at a point");
    add_common(eval, o, true);
    eval->add_option("--form", o.form)->check(CLI::IsMember({"sum", "eta", "product", "fstd", "em", "afe"}));
    eval->add_option("--re", o.re);
    eval->add_option("--im", o.im);
    eval->add_option("--s", o.s, "z = s(1/2 + i t)");
    eval->add_option("--t", o.t);
    eval->add_option("--n", o.n, "Truncation (terms or primes)")->check(CLI::PositiveNumber);
    eval->add_option("--M", o.M, "Euler-Maclaurin cut");
    eval->add_option("--k", o.k, "Euler-Maclaurin correction pairs");
    eval->add_option("--tol", o.tol, "Eta acceleration tolerance")->check(CLI::PositiveNumber);

    auto* superpose = app.add_subcommand("superpose", "Cosine superposition y_{n,alpha}(t) on a grid");
    add_common(superpose, o, true);
    superpose->add_option("--alpha", o.alpha)->check(CLI::PositiveNumber);
    superpose->add_option("--n", o.n)->check(CLI::PositiveNumber);
    superpose->add_option("--tmin", o.tmin);
    superpose->add_option("--tmax", o.tmax);
    superpose->add_option("--step", o.step)->check(CLI::PositiveNumber);

    auto* ztable = app.add_subcommand("ztable", "theta(t) and Hardy Z(t) on a grid");
    add_common(ztable, o, true);
    ztable->add_option("--tmin", o.tmin);
    ztable->add_option("--tmax", o.tmax);
    ztable->add_option("--step", o.step)->check(CLI::PositiveNumber);

    auto* zeros = app.add_subcommand("zeros", "Critical-line zeros");
    zeros->require_subcommand(1);
    auto* scan = zeros->add_subcommand("scan", "Sign scan of Hardy Z plus bisection");
    add_common(scan, o, true);
    scan->add_option("--tmin", o.tmin);
    scan->add_option("--tmax", o.tmax);
    scan->add_option("--step", o.step)->check(CLI::PositiveNumber);
    scan->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
    auto* fixedpoint = zeros->add_subcommand("fixedpoint", "Damped fixed-point iteration for t");
    add_common(fixedpoint, o, false);
    fixedpoint->add_option("--n", o.n)->check(CLI::PositiveNumber);
    fixedpoint->add_option("--t0", o.t0);
    fixedpoint->add_option("--damping", o.damping)->check(CLI::Range(0.0, 1.0));
    fixedpoint->add_option("--max-iter", o.max_iter);

    auto* duality = app.add_subcommand("duality", "Zero/prime experiments");
    duality->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> duality_cmds;
    for (const char* name : {"frac", "reconstruct-lambda", "reconstruct-prime", "histogram", "funceq"}) {
        auto* sub = duality->add_subcommand(name);
        add_common(sub, o, true);
        sub->add_option("--zeros", o.zeros_path, "Zero store CSV (scanned when absent)");
        sub->add_option("--height", o.height, "Scan height when --zeros is absent")->check(CLI::PositiveNumber);
        sub->add_option("--m", o.m, "Number of primes")->check(CLI::PositiveNumber);
        sub->add_option("--n", o.n, "Number of zeros")->check(CLI::PositiveNumber);
        duality_cmds.emplace_back(name, sub);
    }
    duality_cmds[0].second->add_option("--direction", o.direction)->check(CLI::IsMember({"k", "j"}));
    duality_cmds[0].second->add_option("--j", o.j)->check(CLI::PositiveNumber);
    duality_cmds[0].second->add_option("--k", o.k)->check(CLI::PositiveNumber);
    duality_cmds[1].second->add_option("--j", o.j)->check(CLI::PositiveNumber);
    duality_cmds[1].second->add_option("--bootstrap", o.bootstrap, "Feed the estimate back (not literal)");
    duality_cmds[2].second->add_option("--k", o.k)->check(CLI::PositiveNumber);
    duality_cmds[3].second->add_option("--bins", o.bins)->check(CLI::Range(10, 1000000));
    duality_cmds[4].second->add_option("--variant", o.variant)
        ->check(CLI::IsMember({"both", "with-half", "without-half"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << one_line(e.what()) << "\n";
        return kExitUsage;
    }

    try {
        Output result;
        std::string default_emit = "csv";
        if (primes->parsed()) {
            result = cmd_primes(o);
        } else if (eval->parsed()) {
            result = cmd_zeta_eval(o);
            default_emit = "json";
        } else if (superpose->parsed()) {
            result = cmd_superpose(o);
        } else if (ztable->parsed()) {
            result = cmd_ztable(o);
        } else if (scan->parsed()) {
            result = cmd_zeros_scan(o);
        } else if (fixedpoint->parsed()) {
            result = cmd_zeros_fixedpoint(o);
        } else {
            default_emit = "json";
            for (const auto& [name, sub] : duality_cmds)
                if (sub->parsed())
                    result = cmd_duality(name, o);
        }
        render(result, o, default_emit, out);
    } catch (const UsageError& e) {
        err << "usage error: " << one_line(e.what()) << "\n";
        return kExitUsage;
    } catch (const SingularStepError& e) {
        out << trace_json(e.trace(), o);
        err << "error kind=" << to_string(e.kind()) << " message=" << one_line(e.what()) << "\n";
        return kExitError;
    } catch (const Error& e) {
        err << "error kind=" << to_string(e.kind()) << " message=" << one_line(e.what()) << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error kind=internal message=" << one_line(e.what()) << "\n";
        return kExitError;
    }
    return kExitOk;
}

} // namespace zetalab::cli
