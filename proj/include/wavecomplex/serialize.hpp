// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "wavecomplex/complexity.hpp"
#include "wavecomplex/hmt.hpp"
#include "wavecomplex/orchestrate.hpp"
#include "wavecomplex/signal.hpp"
#include "wavecomplex/wavelet_tree.hpp"

namespace wavecomplex {

// --- CSV -------------------------------------------------------------------

/// One sample per line, 17 significant digits.
void write_signal_csv(std::ostream& out, const Signal& s);

/// Reads one sample per line; blank lines and '#' comments are skipped.
/// Throws std::runtime_error on unparsable content.
Signal read_signal_csv(std::istream& in);

void write_selection_csv(std::ostream& out, const SelectionResult& result);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// One-row report CSV:
/// wavelet,J,M,global_C,global_C_norm,entropy_rate_norm,monotone_run,local_C_0..
void write_report_csv(std::ostream& out, const ComplexityReport& report,
                      const std::string& wavelet, int num_states);

// --- JSON ------------------------------------------------------------------

nlohmann::json tree_to_json(const WaveletTree& t);
WaveletTree tree_from_json(const nlohmann::json& j);

/// Model persistence {J, M, root_pmf, trans, means, variances,
/// log_likelihood, config}; round-trips bit-exactly.
nlohmann::json model_to_json(const HmtParams& params, double log_likelihood,
                             const FitConfig& cfg);
struct StoredModel {
    HmtParams params;
    double log_likelihood = 0.0;
    FitConfig config;
};
StoredModel model_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ComplexityReport& report);

}  // namespace wavecomplex
