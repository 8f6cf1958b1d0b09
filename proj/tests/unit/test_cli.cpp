#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli/cli.hpp"
#include "zetalab/report.hpp"
#include "zetalab/zeros.hpp"

using zetalab::cli::run_command;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path tmp(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("zetalab_cli_" + name);
}

} // namespace

TEST(Cli, PrimesCsv)
{
    const auto r = run({"primes", "--count", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "k,p_k,recip_prefix,recip_sqrt_prefix\n"
                     "1,2,0.5,0.70710678118654746\n"
                     "2,3,0.83333333333333326,1.2844570503761732\n"
                     "3,5,1.0333333333333332,1.7316706458761313\n");
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, PrimesJson)
{
    const auto r = run({"primes", "--count", "2", "--emit", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"p_k\": 3"), std::string::npos);
    EXPECT_NE(r.out.find("\"count\": \"2\""), std::string::npos);
}

TEST(Cli, UnknownFlagIsUsageErrorWithoutOutput)
{
    const auto path = tmp("never.csv");
    std::filesystem::remove(path);
    const auto r = run({"superpose", "--n", "10", "--bogus", "1", "--out", path.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(std::filesystem::exists(path));
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"zeta"}).code, 2);
    EXPECT_EQ(run({"zeta", "eval", "--form", "nope"}).code, 2);
    EXPECT_EQ(run({"zeta", "eval", "--form", "fstd", "--re", "1"}).code, 2);
}

TEST(Cli, ComputationalErrorIsOneLine)
{
    const auto r = run({"zeta", "eval", "--form", "em", "--re", "1", "--im", "0"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(r.err.rfind("error kind=pole message=", 0), 0u) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, IoErrorExitsOne)
{
    const auto r = run({"primes", "--count", "3", "--out", "/nonexistent-dir/x.csv"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.err.rfind("error kind=io", 0), 0u) << r.err;
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, ZetaEvalJsonCarriesBoundAndConfig)
{
    const auto r = run({"zeta", "eval", "--form", "em", "--re", "0.5", "--im", "20", "--M", "20", "--k", "8"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"error_bound\": "), std::string::npos);
    EXPECT_NE(r.out.find("\"M\": \"20\""), std::string::npos);
    EXPECT_NE(r.out.find("\"k\": \"8\""), std::string::npos);
    const auto eta = run({"zeta", "eval", "--form", "eta", "--s", "1", "--t", "14.134725", "--tol", "1e-10"});
    ASSERT_EQ(eta.code, 0) << eta.err;
    EXPECT_NE(eta.out.find("\"tol\": \"1e-10\""), std::string::npos);
    for (const char* form : {"sum", "product", "afe"})
        EXPECT_EQ(run({"zeta", "eval", "--form", form, "--re", "0.5", "--im", "3", "--n", "100"}).code, 0) << form;
    const auto f = run({"zeta", "eval", "--form", "fstd", "--s", "1", "--t", "3", "--n", "100", "--emit", "csv"});
    EXPECT_EQ(f.code, 0);
    EXPECT_EQ(f.out.rfind("re,im,value_re", 0), 0u);
}

TEST(Cli, SuperposeWritesCsvAndManifest)
{
    const auto path = tmp("sup.csv");
    const auto r = run({"superpose", "--alpha", "0.5", "--n", "100", "--tmin", "0", "--tmax", "1", "--step", "0.5",
                        "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    const std::string csv = slurp(path);
    EXPECT_EQ(csv.rfind("t,y\n0,", 0), 0u) << csv;
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
    const std::string manifest = slurp(path.string() + ".manifest.json");
    EXPECT_NE(manifest.find("\"alpha\""), std::string::npos);
    EXPECT_NE(manifest.find("\"version\""), std::string::npos);
}

TEST(Cli, SuperposeThreadInvariant)
{
    const std::vector<std::string> base{"superpose", "--alpha", "1", "--n", "5000", "--tmax", "10", "--step", "0.01"};
    auto a = base, b = base;
    a.insert(a.end(), {"--threads", "1"});
    b.insert(b.end(), {"--threads", "8"});
    EXPECT_EQ(run(a).out, run(b).out);
}

TEST(Cli, ZerosScanStore)
{
    const auto path = tmp("zeros.csv");
    const auto r = run({"zeros", "scan", "--tmin", "0", "--tmax", "40", "--step", "0.05", "--tol", "1e-9", "--out",
                        path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto zs = zetalab::load_zeros(path);
    ASSERT_EQ(zs.size(), 6u);
    EXPECT_NEAR(zs[0].lambda, 14.134725141734695, 1e-9);
}

TEST(Cli, Ztable)
{
    const auto r = run({"ztable", "--tmin", "0", "--tmax", "1", "--step", "0.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("t,theta,Z\n0,0,-1.46035450880958", 0), 0u) << r.out;
}

TEST(Cli, FixedPointJson)
{
    const auto r = run({"zeros", "fixedpoint", "--n", "100", "--t0", "14", "--damping", "0.5", "--max-iter", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"verdict\""), std::string::npos);
    EXPECT_NE(r.out.find("\"steps\""), std::string::npos);
}

TEST(Cli, DualitySubcommands)
{
    const auto path = tmp("dz.csv");
    ASSERT_EQ(run({"zeros", "scan", "--tmax", "60", "--out", path.string()}).code, 0);
    const std::string z = path.string();
    const auto frac = run({"duality", "frac", "--zeros", z, "--m", "1000"});
    ASSERT_EQ(frac.code, 0) << frac.err;
    EXPECT_NE(frac.out.find("mean_frac"), std::string::npos);
    EXPECT_EQ(run({"duality", "reconstruct-lambda", "--zeros", z, "--m", "1000"}).code, 0);
    EXPECT_EQ(run({"duality", "reconstruct-prime", "--zeros", z, "--k", "2"}).code, 0);
    const auto hist = run({"duality", "histogram", "--zeros", z, "--m", "100", "--bins", "10", "--emit", "csv"});
    ASSERT_EQ(hist.code, 0) << hist.err;
    EXPECT_EQ(hist.out.rfind("theta_lo,theta_hi,empirical,reference\n", 0), 0u);
    const auto fe = run({"duality", "funceq", "--zeros", z, "--m", "100"});
    ASSERT_EQ(fe.code, 0) << fe.err;
    EXPECT_NE(fe.out.find("without-half"), std::string::npos);
    EXPECT_EQ(run({"duality", "histogram", "--zeros", z, "--bins", "5"}).code, 2);
    const auto missing = run({"duality", "frac", "--zeros", "/nonexistent/zeros.csv"});
    EXPECT_EQ(missing.code, 1);
    EXPECT_EQ(missing.err.rfind("error kind=io", 0), 0u) << missing.err;
}
