// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#include "wavecomplex/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace wavecomplex {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_signal_csv(std::ostream& out, const Signal& s) {
    for (double v : s.samples) {
        out << fmt17(v) << '\n';
    }
}

Signal read_signal_csv(std::istream& in) {
    Signal s;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // tolerate trailing CR from CRLF files
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::size_t consumed = 0;
        double v = 0.0;
        try {
            v = std::stod(line, &consumed);
        } catch (const std::exception&) {
            throw std::runtime_error("read_signal_csv: unparsable value at line " +
                                     std::to_string(line_no));
        }
        while (consumed < line.size() &&
               (line[consumed] == ' ' || line[consumed] == '\t' || line[consumed] == ',')) {
            ++consumed;
        }
        if (consumed != line.size()) {
            throw std::runtime_error("read_signal_csv: trailing content at line " +
                                     std::to_string(line_no));
        }
        s.samples.push_back(v);
    }
    return s;
}

void write_selection_csv(std::ostream& out, const SelectionResult& result) {
    out << "wavelet,global_C_norm,residual_energy_density,winner,model_ref,status\n";
    for (const auto& row : result.rows) {
        out << row.wavelet << ',';
        if (row.status == "ok") {
            out << fmt17(row.global_C_norm);
        }
        out << ',';
        if (row.status == "ok" && !std::isnan(row.residual_energy_density)) {
            out << fmt17(row.residual_energy_density);
        }
        out << ',' << (row.winner ? 1 : 0) << ',' << row.model_ref << ',' << row.status
            << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "r,global_C_norm,entropy_rate_norm,monotone_run,status\n";
    for (const auto& row : rows) {
        out << fmt17(row.r) << ',';
        if (row.status == "ok") {
            out << fmt17(row.global_C_norm) << ',' << fmt17(row.entropy_rate_norm) << ','
                << row.monotone_run;
        } else {
            out << ",,";
        }
        out << ',' << row.status << '\n';
    }
}

void write_report_csv(std::ostream& out, const ComplexityReport& report,
                      const std::string& wavelet, int num_states) {
    out << "wavelet,J,M,global_C,global_C_norm,entropy_rate_norm,monotone_run";
    for (std::size_t j = 0; j < report.local_C.size(); ++j) {
        out << ",local_C_" << j;
    }
    out << '\n';
    out << wavelet << ',' << report.local_C.size() << ',' << num_states << ','
        << fmt17(report.global_C) << ',' << fmt17(report.global_C_norm) << ','
        << fmt17(report.entropy_rate_norm) << ',' << report.monotone_run;
    for (double c : report.local_C) {
        out << ',' << fmt17(c);
    }
    out << '\n';
}

nlohmann::json tree_to_json(const WaveletTree& t) {
    return {{"J", t.levels}, {"u0", t.u0}, {"details", t.details}};
}

WaveletTree tree_from_json(const nlohmann::json& j) {
    WaveletTree t;
    t.levels = j.at("J").get<int>();
    t.u0 = j.at("u0").get<double>();
    t.details = j.at("details").get<std::vector<std::vector<double>>>();
    if (!t.well_formed()) {
        throw std::invalid_argument("tree_from_json: malformed tree");
    }
    return t;
}

nlohmann::json model_to_json(const HmtParams& params, double log_likelihood,
                             const FitConfig& cfg) {
    nlohmann::json config = {
        {"num_states", cfg.num_states},
        {"max_iter", cfg.max_iter},
        {"rel_tol", cfg.rel_tol},
        {"restarts", cfg.restarts},
        {"variance_floor", cfg.variance_floor},
        {"variance_floor_rel", cfg.variance_floor_rel},
        {"zero_mean", cfg.zero_mean},
        {"seed", cfg.seed},
        {"estimator", "posterior_weighted"},
    };
    return {{"J", params.levels},
            {"M", params.num_states},
            {"root_pmf", params.root_pmf},
            {"trans", params.trans},
            {"means", params.means},
            {"variances", params.variances},
            {"log_likelihood", log_likelihood},
            {"config", config}};
}

StoredModel model_from_json(const nlohmann::json& j) {
    StoredModel stored;
    stored.params.levels = j.at("J").get<int>();
    stored.params.num_states = j.at("M").get<int>();
    stored.params.root_pmf = j.at("root_pmf").get<std::vector<double>>();
    stored.params.trans = j.at("trans").get<std::vector<std::vector<double>>>();
    stored.params.means = j.at("means").get<std::vector<std::vector<double>>>();
    stored.params.variances = j.at("variances").get<std::vector<std::vector<double>>>();
    stored.log_likelihood = j.at("log_likelihood").get<double>();
    const auto& config = j.at("config");
    stored.config.num_states = config.at("num_states").get<int>();
    stored.config.max_iter = config.at("max_iter").get<int>();
    // nlohmann dumps non-finite numbers as null; read that back as infinity
    stored.config.rel_tol = config.at("rel_tol").is_null()
                                ? std::numeric_limits<double>::infinity()
                                : config.at("rel_tol").get<double>();
    stored.config.restarts = config.at("restarts").get<int>();
    stored.config.variance_floor = config.at("variance_floor").get<double>();
    stored.config.variance_floor_rel = config.at("variance_floor_rel").get<double>();
    stored.config.zero_mean = config.at("zero_mean").get<bool>();
    stored.config.seed = config.at("seed").get<std::uint64_t>();
    stored.params.validate();
    return stored;
}

nlohmann::json report_to_json(const ComplexityReport& report) {
    return {{"global_C", report.global_C},
            {"global_C_norm", report.global_C_norm},
            {"local_C", report.local_C},
            {"entropy_rate", report.entropy_rate},
            {"entropy_rate_norm", report.entropy_rate_norm},
            {"monotone_run", report.monotone_run}};
}

}  // namespace wavecomplex
