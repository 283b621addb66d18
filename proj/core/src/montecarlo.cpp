#include "cgof/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "cgof/error.hpp"
#include "cgof/parallel.hpp"
#include "cgof/version.hpp"

namespace cgof {

namespace {

std::size_t order_index(double level, std::size_t reps) {
    const double raw = (1.0 - level) * static_cast<double>(reps);
    const auto idx = static_cast<std::size_t>(std::ceil(raw - 1e-9));
    return std::clamp<std::size_t>(idx, 1, reps);
}

double order_statistic(std::vector<double> values, std::size_t one_based) {
    const auto nth = values.begin() + static_cast<std::ptrdiff_t>(one_based - 1);
    std::nth_element(values.begin(), nth, values.end());
    return *nth;
}

}  // namespace

RunMetadata make_metadata(std::uint64_t seed) {
    return RunMetadata{kEngineName, kEngineVersion, kGeneratorName, seed};
}

void CalibrationSpec::validate() const {
    cfg.validate();
    if (n < 3) throw DomainError("CalibrationSpec: n must be >= 3");
    if (reps < 100) throw DomainError("CalibrationSpec: reps must be >= 100");
    if (levels.empty()) throw DomainError("CalibrationSpec: at least one level is required");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!(levels[i] > 0.0 && levels[i] < 1.0)) {
            throw DomainError("CalibrationSpec: levels must lie in (0,1)");
        }
        if (i > 0 && !(levels[i] > levels[i - 1])) {
            throw DomainError("CalibrationSpec: levels must be sorted ascending");
        }
    }
}

const CriticalValueRow& CriticalValueTable::at(double level) const {
    for (const auto& row : rows) {
        if (std::abs(row.level - level) < 1e-12) return row;
    }
    throw DomainError("CriticalValueTable: level not calibrated");
}

std::vector<NullReplicate> simulate_null(std::size_t n, const TestConfig& cfg, std::size_t reps,
                                         std::uint64_t seed, std::uint64_t domain, bool baselines,
                                         std::size_t workers) {
    std::vector<NullReplicate> out(reps);
    const AlternativeSpec null_law = alt::Cauchy{};
    parallel_for(reps, resolve_workers(workers), [&](std::size_t r) {
        Engine eng = make_engine(stream_seed(seed, domain, r));
        std::vector<double> values;
        draw(null_law, n, eng, values);
        const Sample x(std::move(values));
        const FittedStatistic fs = compute_statistic(x, cfg);
        NullReplicate& rep = out[r];
        rep.delta = fs.value.delta;
        rep.capped = fs.value.quadrature_capped;
        rep.converged = fs.fit.converged;
        if (baselines) {
            const CauchyFit joint =
                cfg.fit_mode == FitMode::joint ? fs.fit : fit_cauchy_ml(x, FitMode::joint);
            rep.edf = edf_statistics(pit_transform(x, joint));
        }
    });
    return out;
}

CriticalValueTable calibrate(const CalibrationSpec& spec) {
    spec.validate();
    const auto reps = simulate_null(spec.n, spec.cfg, spec.reps, spec.seed,
                                    stream_domain::kCalibration, spec.baselines, spec.workers);
    CriticalValueTable table;
    table.spec = spec;
    table.metadata = make_metadata(spec.seed);
    std::vector<double> deltas(reps.size());
    for (std::size_t r = 0; r < reps.size(); ++r) {
        deltas[r] = reps[r].delta;
        table.capped_replicates += reps[r].capped ? 1 : 0;
        table.unconverged_fits += reps[r].converged ? 0 : 1;
    }
    std::vector<double> ks, cvm, ad, watson;
    if (spec.baselines) {
        for (const auto& rep : reps) {
            ks.push_back(rep.edf->ks);
            cvm.push_back(rep.edf->cvm);
            ad.push_back(rep.edf->ad);
            watson.push_back(rep.edf->watson);
        }
    }
    for (double level : spec.levels) {
        CriticalValueRow row;
        row.level = level;
        row.order_index = order_index(level, spec.reps);
        row.critical_value = order_statistic(deltas, row.order_index);
        if (spec.baselines) {
            row.baseline = EdfStatistics{order_statistic(ks, row.order_index),
                                         order_statistic(cvm, row.order_index),
                                         order_statistic(ad, row.order_index),
                                         order_statistic(watson, row.order_index)};
        }
        table.rows.push_back(row);
    }
    return table;
}

double mc_pvalue_from_statistic(double observed, std::size_t n, const TestConfig& cfg,
                                std::size_t reps, std::uint64_t seed, std::size_t workers) {
    if (reps < 99) throw DomainError("mc_pvalue: at least 99 replicates are required");
    const auto null = simulate_null(n, cfg, reps, seed, stream_domain::kPValue, false, workers);
    const auto exceed = std::count_if(null.begin(), null.end(),
                                      [&](const NullReplicate& r) { return r.delta >= observed; });
    return (1.0 + static_cast<double>(exceed)) / (static_cast<double>(reps) + 1.0);
}

double mc_pvalue(const Sample& x, const TestConfig& cfg, std::size_t reps, std::uint64_t seed,
                 std::size_t workers) {
    const double observed = compute_statistic(x, cfg).value.delta;
    return mc_pvalue_from_statistic(observed, x.size(), cfg, reps, seed, workers);
}

void PowerStudySpec::validate() const {
    cfg.validate();
    if (n < 3) throw DomainError("PowerStudySpec: n must be >= 3");
    if (reps < 100) throw DomainError("PowerStudySpec: reps must be >= 100");
    if (calibration_reps < 100) throw DomainError("PowerStudySpec: calibration_reps must be >= 100");
    if (!(level > 0.0 && level < 1.0)) throw DomainError("PowerStudySpec: level must lie in (0,1)");
    if (alternatives.empty()) throw DomainError("PowerStudySpec: no alternatives given");
    for (const auto& a : alternatives) cgof::validate(a);
}

double PowerRow::percent() const noexcept {
    return reps == 0 ? 0.0 : 100.0 * static_cast<double>(rejections) / static_cast<double>(reps);
}

PowerTable power_study(const PowerStudySpec& spec) {
    spec.validate();
    CalibrationSpec cal;
    cal.n = spec.n;
    cal.cfg = spec.cfg;
    cal.reps = spec.calibration_reps;
    cal.levels = {spec.level};
    cal.seed = spec.seed;
    cal.baselines = spec.baseline_tests;
    cal.workers = spec.workers;
    const CriticalValueTable cv_table = calibrate(cal);

    PowerTable table;
    table.spec = spec;
    table.metadata = make_metadata(spec.seed);
    table.critical_value = cv_table.rows.front().critical_value;
    table.baseline_critical_values = cv_table.rows.front().baseline;
    const std::size_t workers = resolve_workers(spec.workers);

    for (std::size_t i = 0; i < spec.alternatives.size(); ++i) {
        const AlternativeSpec& alternative = spec.alternatives[i];
        struct Outcome {
            bool reject = false;
            bool capped = false;
            bool converged = true;
            BaselineRejections baseline;
        };
        std::vector<Outcome> outcomes(spec.reps);
        parallel_for(spec.reps, workers, [&](std::size_t r) {
            Engine eng = make_engine(stream_seed(spec.seed, stream_domain::kAlternativeBase + i, r));
            std::vector<double> values;
            draw(alternative, spec.n, eng, values);
            const Sample x(std::move(values));
            const FittedStatistic fs = compute_statistic(x, spec.cfg);
            Outcome& o = outcomes[r];
            o.reject = fs.value.delta > table.critical_value;
            o.capped = fs.value.quadrature_capped;
            o.converged = fs.fit.converged;
            if (spec.baseline_tests) {
                const CauchyFit joint = spec.cfg.fit_mode == FitMode::joint
                                            ? fs.fit
                                            : fit_cauchy_ml(x, FitMode::joint);
                const EdfStatistics e = edf_statistics(pit_transform(x, joint));
                const EdfStatistics& c = *table.baseline_critical_values;
                o.baseline = {e.ks > c.ks ? 1U : 0U, e.cvm > c.cvm ? 1U : 0U,
                              e.ad > c.ad ? 1U : 0U, e.watson > c.watson ? 1U : 0U};
            }
        });
        PowerRow row;
        row.alternative = alternative;
        row.reps = spec.reps;
        BaselineRejections totals;
        for (const auto& o : outcomes) {
            row.rejections += o.reject ? 1 : 0;
            row.capped_replicates += o.capped ? 1 : 0;
            row.unconverged_fits += o.converged ? 0 : 1;
            totals.ks += o.baseline.ks;
            totals.cvm += o.baseline.cvm;
            totals.ad += o.baseline.ad;
            totals.watson += o.baseline.watson;
        }
        if (spec.baseline_tests) row.baseline = totals;
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace cgof
