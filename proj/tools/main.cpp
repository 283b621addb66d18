#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cgof/error.hpp"
#include "cgof/version.hpp"
#include "cli/cli.hpp"

namespace cli = cgof::cli;

namespace {

struct Common {
    double a = 6.0;
    double gamma = 2.5;
    double exponent = 1.0;
    std::string method = "auto";
    std::string rule = "trapezoid";
    std::size_t quad_nodes = 64;
    std::string fit = "joint";
    std::uint64_t seed = 1;
    bool baselines = false;
    std::string format;
    std::string output = "-";
    std::size_t workers = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_a_gamma) {
    if (with_a_gamma) {
        cmd->add_option("--a", c.a, "CF power a")->capture_default_str();
        cmd->add_option("--gamma", c.gamma, "weight parameter gamma")->capture_default_str();
    }
    cmd->add_option("--exponent", c.exponent, "scale exponent e in X / lambda^e (0.5 or 1)")
        ->capture_default_str();
    cmd->add_option("--method", c.method, "vstat | quadrature | auto")->capture_default_str();
    cmd->add_option("--rule", c.rule, "trapezoid | gauss-hermite")->capture_default_str();
    cmd->add_option("--quad-nodes", c.quad_nodes, "minimum quadrature nodes")->capture_default_str();
    cmd->add_option("--fit", c.fit, "joint | scale-only")->capture_default_str();
    cmd->add_option("--seed", c.seed, "master seed")->capture_default_str();
    cmd->add_flag("--baselines", c.baselines, "also run KS, CvM, AD and Watson tests");
    cmd->add_option("--format", c.format, "json | csv | markdown");
    cmd->add_option("--output,-o", c.output, "output path, - for standard output")
        ->capture_default_str();
    cmd->add_option("--workers", c.workers, "worker threads (0 = GOF_THREADS or all cores)");
}

cgof::TestConfig make_config(const Common& c) {
    cgof::TestConfig cfg;
    cfg.a = c.a;
    cfg.gamma = c.gamma;
    try {
        cfg.exponent = cgof::exponent_from_value(c.exponent);
    } catch (const cgof::DomainError& e) {
        throw cli::CliError(cli::kExitUsage, e.what());
    }
    cfg.method = cli::parse_method(c.method);
    cfg.rule = cli::parse_rule(c.rule);
    cfg.quad_nodes = c.quad_nodes;
    cfg.fit_mode = cli::parse_fit_mode(c.fit);
    return cfg;
}

template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    // Render fully before touching the file so failures leave no partial output.
    std::ostringstream buf;
    fn(buf);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw cli::CliError(cli::kExitUsage, "cannot open output '" + path + "'");
    f << buf.str();
    if (!f) throw cli::CliError(cli::kExitUsage, "write failed for '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goodness-of-fit test for the Cauchy distribution"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cgof::kEngineName) + " " +
                                          std::string(cgof::kEngineVersion));

    Common tc, cc, pc;

    auto* test = app.add_subcommand("test", "test a sample for the Cauchy law");
    std::string input;
    std::optional<std::string> column;
    double level = 0.05;
    std::optional<std::size_t> pvalue_reps;
    std::size_t test_cal_reps = 10000;
    test->add_option("input", input, "data file, - for standard input")->required();
    test->add_option("--column", column, "CSV column (header name or 1-based index)");
    test->add_option("--level", level, "significance level")->capture_default_str();
    test->add_option("--pvalue-reps", pvalue_reps, "Monte Carlo replicates for a p-value");
    test->add_option("--calibration-reps", test_cal_reps, "replicates for the critical value")
        ->capture_default_str();
    add_common(test, tc, true);

    auto* calibrate = app.add_subcommand("calibrate", "null critical values");
    std::string cal_ns = "50", cal_levels = "0.05,0.10";
    std::size_t cal_reps = 10000;
    calibrate->add_option("--n", cal_ns, "sample sizes, comma separated")->capture_default_str();
    calibrate->add_option("--reps", cal_reps, "Monte Carlo replicates")->capture_default_str();
    calibrate->add_option("--levels", cal_levels, "levels, comma separated")->capture_default_str();
    add_common(calibrate, cc, true);

    auto* power = app.add_subcommand("power", "rejection rates under alternatives");
    std::string pow_ns = "20", alts, pow_as = "6", pow_gammas = "2.5";
    std::size_t pow_reps = 3000, pow_cal_reps = 20000;
    double pow_level = 0.10;
    power->add_option("--n", pow_ns, "sample sizes, comma separated")->capture_default_str();
    power->add_option("--alts", alts, "alternatives, comma separated")->required();
    power->add_option("--a", pow_as, "values of a, comma separated")->capture_default_str();
    power->add_option("--gamma", pow_gammas, "values of gamma, comma separated")
        ->capture_default_str();
    power->add_option("--reps", pow_reps, "replicates per alternative")->capture_default_str();
    power->add_option("--calibration-reps", pow_cal_reps, "null replicates for the critical value")
        ->capture_default_str();
    power->add_option("--level", pow_level, "significance level")->capture_default_str();
    add_common(power, pc, false);

    auto* sample = app.add_subcommand("sample", "draw a sample");
    std::string dist;
    std::size_t sample_n = 0;
    std::uint64_t sample_seed = 1;
    std::string sample_out = "-";
    sample->add_option("--dist", dist, "distribution")->required();
    sample->add_option("--n", sample_n, "sample size")->required();
    sample->add_option("--seed", sample_seed, "seed")->capture_default_str();
    sample->add_option("--output,-o", sample_out, "output path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kExitOk : cli::kExitUsage;
    }

    try {
        if (*test) {
            cli::TestOptions o;
            o.cfg = make_config(tc);
            o.level = level;
            o.pvalue_reps = pvalue_reps;
            o.calibration_reps = test_cal_reps;
            o.seed = tc.seed;
            o.baselines = tc.baselines;
            o.workers = tc.workers;
            const auto fmt = cli::parse_format(tc.format.empty() ? "json" : tc.format);
            const auto data = cli::read_numbers(input, column);
            const auto report = cli::run_test(data, o);
            with_output(tc.output, [&](std::ostream& os) { cli::emit(report, fmt, os); });
        } else if (*calibrate) {
            cli::CalibrateOptions o;
            o.ns = cli::parse_count_list(cal_ns);
            o.cfg = make_config(cc);
            o.reps = cal_reps;
            o.levels = cli::parse_real_list(cal_levels);
            o.seed = cc.seed;
            o.baselines = cc.baselines;
            o.workers = cc.workers;
            const auto fmt = cli::parse_format(cc.format.empty() ? "markdown" : cc.format);
            const auto tables = cli::run_calibrate(o);
            with_output(cc.output, [&](std::ostream& os) { cli::emit(tables, fmt, os); });
        } else if (*power) {
            cli::PowerOptions o;
            o.ns = cli::parse_count_list(pow_ns);
            o.alternatives = cli::parse_alternatives(alts);
            o.as = cli::parse_real_list(pow_as);
            o.gammas = cli::parse_real_list(pow_gammas);
            o.base_cfg = make_config(pc);
            o.reps = pow_reps;
            o.calibration_reps = pow_cal_reps;
            o.level = pow_level;
            o.seed = pc.seed;
            o.baselines = pc.baselines;
            o.workers = pc.workers;
            const auto fmt = cli::parse_format(pc.format.empty() ? "markdown" : pc.format);
            const auto tables = cli::run_power(o);
            with_output(pc.output, [&](std::ostream& os) { cli::emit(tables, fmt, os); });
        } else if (*sample) {
            cli::SampleOptions o;
            o.dist = cli::parse_alternative(dist);
            o.n = sample_n;
            o.seed = sample_seed;
            with_output(sample_out, [&](std::ostream& os) { cli::run_sample(o, os); });
        }
    } catch (const cli::CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const cgof::DegenerateSampleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitDegenerate;
    } catch (const cgof::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return cli::kExitOk;
}
