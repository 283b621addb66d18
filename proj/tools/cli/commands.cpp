#include <cstdio>
#include <ostream>

#include "cgof/error.hpp"
#include "cli/cli.hpp"

namespace cgof::cli {

namespace {

TestConfig checked(const TestConfig& cfg) {
    try {
        cfg.validate();
    } catch (const DomainError& e) {
        throw CliError(kExitUsage, e.what());
    }
    return cfg;
}

}  // namespace

TestReport run_test(const std::vector<double>& data, const TestOptions& options) {
    const TestConfig cfg = checked(options.cfg);
    if (!(options.level > 0.0 && options.level < 1.0)) {
        throw CliError(kExitUsage, "--level must lie in (0,1)");
    }
    if (data.size() < 3) {
        throw CliError(kExitDegenerate, "need at least 3 observations, got " + std::to_string(data.size()));
    }
    const Sample x(data);

    TestReport report;
    report.n = x.size();
    report.cfg = cfg;
    report.level = options.level;
    report.seed = options.seed;
    report.metadata = make_metadata(options.seed);
    try {
        const FittedStatistic fs = compute_statistic(x, cfg);
        report.fit = fs.fit;
        report.statistic = fs.value;

        if (options.pvalue_reps) {
            if (*options.pvalue_reps < 99) throw CliError(kExitUsage, "--pvalue-reps must be >= 99");
            report.pvalue_reps = options.pvalue_reps;
            report.p_value = mc_pvalue_from_statistic(fs.value.delta, x.size(), cfg,
                                                      *options.pvalue_reps, options.seed,
                                                      options.workers);
            report.decision_rule = "p_value";
            report.reject = *report.p_value < options.level;
        }
        const bool need_calibration = !options.pvalue_reps || options.baselines;
        if (need_calibration) {
            CalibrationSpec spec;
            spec.n = x.size();
            spec.cfg = cfg;
            spec.reps = options.calibration_reps;
            spec.levels = {options.level};
            spec.seed = options.seed;
            spec.baselines = options.baselines;
            spec.workers = options.workers;
            const CriticalValueTable table = calibrate(spec);
            if (!options.pvalue_reps) {
                report.critical_value = table.rows.front().critical_value;
                report.calibration_reps = options.calibration_reps;
                report.decision_rule = "critical_value";
                report.reject = fs.value.delta > *report.critical_value;
            }
            if (options.baselines) {
                const CauchyFit joint =
                    cfg.fit_mode == FitMode::joint ? fs.fit : fit_cauchy_ml(x, FitMode::joint);
                report.baselines = BaselineDecision{edf_statistics(pit_transform(x, joint)),
                                                    table.rows.front().baseline};
            }
        }
    } catch (const DegenerateSampleError& e) {
        throw CliError(kExitDegenerate, e.what());
    } catch (const DomainError& e) {
        throw CliError(kExitUsage, e.what());
    }
    return report;
}

std::vector<CriticalValueTable> run_calibrate(const CalibrateOptions& options) {
    const TestConfig cfg = checked(options.cfg);
    std::vector<CriticalValueTable> tables;
    try {
        for (std::size_t n : options.ns) {
            CalibrationSpec spec;
            spec.n = n;
            spec.cfg = cfg;
            spec.reps = options.reps;
            spec.levels = options.levels;
            spec.seed = options.seed;
            spec.baselines = options.baselines;
            spec.workers = options.workers;
            tables.push_back(calibrate(spec));
        }
    } catch (const DomainError& e) {
        throw CliError(kExitUsage, e.what());
    }
    return tables;
}

std::vector<PowerTable> run_power(const PowerOptions& options) {
    if (options.alternatives.empty()) throw CliError(kExitUsage, "--alts is required");
    std::vector<PowerTable> tables;
    try {
        for (std::size_t n : options.ns) {
            for (double gamma : options.gammas) {
                for (double a : options.as) {
                    PowerStudySpec spec;
                    spec.n = n;
                    spec.alternatives = options.alternatives;
                    spec.cfg = options.base_cfg;
                    spec.cfg.a = a;
                    spec.cfg.gamma = gamma;
                    spec.reps = options.reps;
                    spec.calibration_reps = options.calibration_reps;
                    spec.level = options.level;
                    spec.seed = options.seed;
                    spec.baseline_tests = options.baselines;
                    spec.workers = options.workers;
                    tables.push_back(power_study(spec));
                }
            }
        }
    } catch (const DomainError& e) {
        throw CliError(kExitUsage, e.what());
    }
    return tables;
}

void run_sample(const SampleOptions& options, std::ostream& out) {
    if (options.n == 0) throw CliError(kExitUsage, "--n must be >= 1");
    const Sample s = sample(options.dist, options.n, options.seed);
    char buf[64];
    for (double v : s) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        out << buf;
    }
}

}  // namespace cgof::cli
