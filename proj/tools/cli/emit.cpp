#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>

#include "cli/cli.hpp"

namespace cgof::cli {

using nlohmann::json;

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json to_json(const EdfStatistics& e) {
    return {{"ks", e.ks}, {"cvm", e.cvm}, {"ad", e.ad}, {"watson", e.watson}};
}

json to_json(const CauchyFit& f) {
    return {{"theta_hat", f.theta_hat},
            {"lambda_hat", f.lambda_hat},
            {"log_likelihood", f.log_likelihood},
            {"iterations", f.iterations},
            {"converged", f.converged},
            {"mode", std::string(to_string(f.mode))},
            {"start", std::string(to_string(f.start))}};
}

void metadata_lines(const RunMetadata& m, std::ostream& out) {
    out << "\n_" << m.engine << " " << m.engine_version << ", generator " << m.generator
        << ", seed " << m.seed << "_\n";
}

std::string config_line(const TestConfig& c) {
    return "a=" + fixed(c.a, 2) + " gamma=" + fixed(c.gamma, 2) +
           " exponent=" + fixed(exponent_value(c.exponent), 1) + " method=" +
           std::string(to_string(c.method)) + " rule=" + std::string(to_string(c.rule)) +
           " fit=" + std::string(to_string(c.fit_mode));
}

std::string percent(std::size_t k, std::size_t m) {
    return fixed(100.0 * static_cast<double>(k) / static_cast<double>(m), 1);
}

}  // namespace

json to_json(const TestConfig& c) {
    return {{"a", c.a},
            {"gamma", c.gamma},
            {"exponent", exponent_value(c.exponent)},
            {"method", std::string(to_string(c.method))},
            {"quad_nodes", c.quad_nodes},
            {"rule", std::string(to_string(c.rule))},
            {"fit_mode", std::string(to_string(c.fit_mode))},
            {"vstat_budget", c.vstat_budget},
            {"max_half_nodes", c.max_half_nodes}};
}

json to_json(const RunMetadata& m) {
    return {{"engine", m.engine},
            {"engine_version", m.engine_version},
            {"generator", m.generator},
            {"seed", m.seed}};
}

json to_json(const TestReport& r) {
    json j = {{"kind", "test_report"},
              {"n", r.n},
              {"config", to_json(r.cfg)},
              {"level", r.level},
              {"seed", r.seed},
              {"fit", to_json(r.fit)},
              {"statistic", r.statistic.delta},
              {"method_used", std::string(to_string(r.statistic.method_used))},
              {"nodes_used", r.statistic.nodes_used},
              {"quadrature_capped", r.statistic.quadrature_capped},
              {"critical_value", nullptr},
              {"calibration_reps", nullptr},
              {"p_value", nullptr},
              {"pvalue_reps", nullptr},
              {"reject", r.reject},
              {"decision_rule", r.decision_rule},
              {"metadata", to_json(r.metadata)}};
    if (r.critical_value) j["critical_value"] = *r.critical_value;
    if (r.calibration_reps) j["calibration_reps"] = *r.calibration_reps;
    if (r.p_value) j["p_value"] = *r.p_value;
    if (r.pvalue_reps) j["pvalue_reps"] = *r.pvalue_reps;
    if (r.baselines) {
        json b = {{"statistics", to_json(r.baselines->statistics)}};
        if (r.baselines->critical_values) {
            const EdfStatistics& s = r.baselines->statistics;
            const EdfStatistics& c = *r.baselines->critical_values;
            b["critical_values"] = to_json(*r.baselines->critical_values);
            b["reject"] = {{"ks", s.ks > c.ks},
                           {"cvm", s.cvm > c.cvm},
                           {"ad", s.ad > c.ad},
                           {"watson", s.watson > c.watson}};
        }
        j["baselines"] = b;
    }
    return j;
}

json to_json(const std::vector<CriticalValueTable>& tables) {
    json arr = json::array();
    for (const auto& t : tables) {
        json rows = json::array();
        for (const auto& row : t.rows) {
            json jr = {{"level", row.level},
                       {"critical_value", row.critical_value},
                       {"order_index", row.order_index}};
            if (row.baseline) jr["baseline"] = to_json(*row.baseline);
            rows.push_back(jr);
        }
        arr.push_back({{"n", t.spec.n},
                       {"reps", t.spec.reps},
                       {"config", to_json(t.spec.cfg)},
                       {"rows", rows},
                       {"capped_replicates", t.capped_replicates},
                       {"unconverged_fits", t.unconverged_fits},
                       {"metadata", to_json(t.metadata)}});
    }
    return {{"kind", "critical_value_table"}, {"tables", arr}};
}

json to_json(const std::vector<PowerTable>& tables) {
    json arr = json::array();
    for (const auto& t : tables) {
        json rows = json::array();
        for (const auto& row : t.rows) {
            json jr = {{"alternative", to_string(row.alternative)},
                       {"label", display_label(row.alternative)},
                       {"rejections", row.rejections},
                       {"reps", row.reps},
                       {"percent", row.percent()},
                       {"capped_replicates", row.capped_replicates},
                       {"unconverged_fits", row.unconverged_fits}};
            if (row.baseline) {
                const double m = static_cast<double>(row.reps);
                jr["baseline_percent"] = {{"ks", 100.0 * row.baseline->ks / m},
                                          {"cvm", 100.0 * row.baseline->cvm / m},
                                          {"ad", 100.0 * row.baseline->ad / m},
                                          {"watson", 100.0 * row.baseline->watson / m}};
            }
            rows.push_back(jr);
        }
        json jt = {{"n", t.spec.n},
                   {"level", t.spec.level},
                   {"reps", t.spec.reps},
                   {"calibration_reps", t.spec.calibration_reps},
                   {"config", to_json(t.spec.cfg)},
                   {"critical_value", t.critical_value},
                   {"rows", rows},
                   {"metadata", to_json(t.metadata)}};
        if (t.baseline_critical_values) {
            jt["baseline_critical_values"] = to_json(*t.baseline_critical_values);
        }
        arr.push_back(jt);
    }
    return {{"kind", "power_table"}, {"tables", arr}};
}

void emit(const TestReport& r, Format format, std::ostream& out) {
    switch (format) {
    case Format::json:
        out << to_json(r).dump(2) << '\n';
        return;
    case Format::csv: {
        out << "field,value\n";
        out << "n," << r.n << '\n';
        out << "a," << full(r.cfg.a) << '\n';
        out << "gamma," << full(r.cfg.gamma) << '\n';
        out << "exponent," << full(exponent_value(r.cfg.exponent)) << '\n';
        out << "theta_hat," << full(r.fit.theta_hat) << '\n';
        out << "lambda_hat," << full(r.fit.lambda_hat) << '\n';
        out << "converged," << (r.fit.converged ? "true" : "false") << '\n';
        out << "statistic," << full(r.statistic.delta) << '\n';
        out << "level," << full(r.level) << '\n';
        if (r.critical_value) out << "critical_value," << full(*r.critical_value) << '\n';
        if (r.p_value) out << "p_value," << full(*r.p_value) << '\n';
        out << "reject," << (r.reject ? "true" : "false") << '\n';
        out << "decision_rule," << r.decision_rule << '\n';
        if (r.baselines) {
            const auto& s = r.baselines->statistics;
            out << "ks," << full(s.ks) << "\ncvm," << full(s.cvm) << "\nad," << full(s.ad)
                << "\nwatson," << full(s.watson) << '\n';
        }
        out << "seed," << r.seed << '\n';
        out << "engine_version," << r.metadata.engine_version << '\n';
        return;
    }
    case Format::markdown: {
        out << "| quantity | value |\n|---|---|\n";
        out << "| n | " << r.n << " |\n";
        out << "| theta_hat | " << fixed(r.fit.theta_hat, 6) << " |\n";
        out << "| lambda_hat | " << fixed(r.fit.lambda_hat, 6) << " |\n";
        out << "| statistic | " << fixed(r.statistic.delta, 6) << " |\n";
        out << "| level | " << fixed(r.level, 3) << " |\n";
        if (r.critical_value) out << "| critical value | " << fixed(*r.critical_value, 4) << " |\n";
        if (r.p_value) out << "| p-value | " << fixed(*r.p_value, 4) << " |\n";
        out << "| reject | " << (r.reject ? "yes" : "no") << " |\n";
        if (r.baselines) {
            const auto& s = r.baselines->statistics;
            out << "| KS | " << fixed(s.ks, 6) << " |\n| CvM | " << fixed(s.cvm, 6)
                << " |\n| AD | " << fixed(s.ad, 6) << " |\n| Watson | " << fixed(s.watson, 6)
                << " |\n";
        }
        out << "\n" << config_line(r.cfg) << "\n";
        metadata_lines(r.metadata, out);
        return;
    }
    }
}

void emit(const std::vector<CriticalValueTable>& tables, Format format, std::ostream& out) {
    switch (format) {
    case Format::json:
        out << to_json(tables).dump(2) << '\n';
        return;
    case Format::csv:
        out << "n,a,gamma,exponent,reps,level,critical_value,order_index,ks,cvm,ad,watson\n";
        for (const auto& t : tables) {
            for (const auto& row : t.rows) {
                out << t.spec.n << ',' << full(t.spec.cfg.a) << ',' << full(t.spec.cfg.gamma)
                    << ',' << full(exponent_value(t.spec.cfg.exponent)) << ',' << t.spec.reps
                    << ',' << full(row.level) << ',' << full(row.critical_value) << ','
                    << row.order_index;
                if (row.baseline) {
                    out << ',' << full(row.baseline->ks) << ',' << full(row.baseline->cvm) << ','
                        << full(row.baseline->ad) << ',' << full(row.baseline->watson);
                } else {
                    out << ",,,,";
                }
                out << '\n';
            }
        }
        return;
    case Format::markdown: {
        if (tables.empty()) return;
        out << "| Sig. | n → |";
        for (const auto& t : tables) out << ' ' << t.spec.n << " |";
        out << "\n|---|---|";
        for (std::size_t i = 0; i < tables.size(); ++i) out << "---:|";
        out << '\n';
        const auto& levels = tables.front().spec.levels;
        for (std::size_t k = 0; k < levels.size(); ++k) {
            out << "| | " << fixed(levels[k], 2) << " |";
            for (const auto& t : tables) out << ' ' << fixed(t.rows[k].critical_value, 2) << " |";
            out << '\n';
        }
        if (tables.front().spec.baselines) {
            out << "\n| n | level | KS | CvM | AD | Watson |\n|---:|---:|---:|---:|---:|---:|\n";
            for (const auto& t : tables) {
                for (const auto& row : t.rows) {
                    if (!row.baseline) continue;
                    out << "| " << t.spec.n << " | " << fixed(row.level, 2) << " | "
                        << fixed(row.baseline->ks, 4) << " | " << fixed(row.baseline->cvm, 4)
                        << " | " << fixed(row.baseline->ad, 4) << " | "
                        << fixed(row.baseline->watson, 4) << " |\n";
                }
            }
        }
        out << "\n" << config_line(tables.front().spec.cfg) << ", M=" << tables.front().spec.reps
            << "\n";
        metadata_lines(tables.front().metadata, out);
        return;
    }
    }
}

void emit(const std::vector<PowerTable>& tables, Format format, std::ostream& out) {
    switch (format) {
    case Format::json:
        out << to_json(tables).dump(2) << '\n';
        return;
    case Format::csv:
        out << "n,a,gamma,exponent,level,reps,critical_value,alternative,rejections,percent,"
               "ks,cvm,ad,watson\n";
        for (const auto& t : tables) {
            for (const auto& row : t.rows) {
                out << t.spec.n << ',' << full(t.spec.cfg.a) << ',' << full(t.spec.cfg.gamma)
                    << ',' << full(exponent_value(t.spec.cfg.exponent)) << ','
                    << full(t.spec.level) << ',' << row.reps << ',' << full(t.critical_value)
                    << ",\"" << to_string(row.alternative) << "\"," << row.rejections << ','
                    << fixed(row.percent(), 2);
                if (row.baseline) {
                    out << ',' << percent(row.baseline->ks, row.reps) << ','
                        << percent(row.baseline->cvm, row.reps) << ','
                        << percent(row.baseline->ad, row.reps) << ','
                        << percent(row.baseline->watson, row.reps);
                } else {
                    out << ",,,,";
                }
                out << '\n';
            }
        }
        return;
    case Format::markdown: {
        // One block per n; columns grouped by gamma then a.
        std::map<std::size_t, std::vector<const PowerTable*>> by_n;
        std::vector<std::size_t> order;
        for (const auto& t : tables) {
            if (!by_n.count(t.spec.n)) order.push_back(t.spec.n);
            by_n[t.spec.n].push_back(&t);
        }
        bool first = true;
        for (std::size_t n : order) {
            const auto& group = by_n[n];
            if (!first) out << '\n';
            first = false;
            out << "n = " << n << ", level " << fixed(group.front()->spec.level, 2) << ", M = "
                << group.front()->spec.reps << "\n\n";
            out << "| γ → |";
            for (const auto* t : group) out << ' ' << fixed(t->spec.cfg.gamma, 1) << " |";
            out << "\n|---|";
            for (std::size_t i = 0; i < group.size(); ++i) out << "---:|";
            out << "\n| a → |";
            for (const auto* t : group) out << " *" << fixed(t->spec.cfg.a, 0) << "* |";
            out << '\n';
            for (std::size_t r = 0; r < group.front()->rows.size(); ++r) {
                out << "| " << display_label(group.front()->rows[r].alternative) << " |";
                for (const auto* t : group) {
                    const PowerRow& row = t->rows[r];
                    if (row.rejections == row.reps) {
                        out << " * |";
                    } else {
                        out << ' ' << fixed(row.percent(), 0) << " |";
                    }
                }
                out << '\n';
            }
            out << "| cv |";
            for (const auto* t : group) out << ' ' << fixed(t->critical_value, 3) << " |";
            out << '\n';
            const PowerTable& head = *group.front();
            if (head.baseline_critical_values) {
                out << "\n| alternative | KS | CvM | AD | Watson |\n|---|---:|---:|---:|---:|\n";
                for (const auto& row : head.rows) {
                    if (!row.baseline) continue;
                    out << "| " << display_label(row.alternative) << " | "
                        << percent(row.baseline->ks, row.reps) << " | "
                        << percent(row.baseline->cvm, row.reps) << " | "
                        << percent(row.baseline->ad, row.reps) << " | "
                        << percent(row.baseline->watson, row.reps) << " |\n";
                }
            }
        }
        if (!tables.empty()) {
            out << "\n* = all replicates rejected\n";
            metadata_lines(tables.front().metadata, out);
        }
        return;
    }
    }
}

}  // namespace cgof::cli
