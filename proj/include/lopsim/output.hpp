// SPDX-License-Identifier: Apache-2.0
//
// Deterministic CSV/JSON emission for rate tables, sweep data and simulation
// results. Doubles are printed in their shortest round-trip form; output for
// a given command line is byte-identical across runs (no timestamps).

#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lopsim/analysis.hpp"
#include "lopsim/detection.hpp"
#include "lopsim/fock.hpp"

namespace lopsim {

inline constexpr const char* kToolVersion = "lopsim 0.1.0";

enum class OutputFormat { csv, json };

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

/// Run metadata carried at the top of every emitted record: the subcommand
/// plus its parameters in a fixed order.
struct RunInfo {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
};

std::string emit_rate_table(const RateTable& table, const RunInfo& info,
                            OutputFormat format);

/// Sweep rows: parameter columns first (eta/etap for the beamsplitter sweep,
/// xi for the mismatch sweep), then the four per-Bell-state errors.
std::string emit_error_reports(const std::vector<ErrorReport>& reports,
                               bool mismatch_sweep, const RunInfo& info,
                               OutputFormat format);

struct SimulationResult {
    std::vector<std::tuple<std::string, std::string, double>> rates;
    std::optional<PureState> output_state;        // requested via --state
    bool postselected = false;                    // --postselect given
    double postselect_probability = 0.0;
    std::optional<PureState> postselected_state;  // absent when empty
};

std::string emit_simulation(const SimulationResult& result, const RunInfo& info,
                            OutputFormat format);

}  // namespace lopsim
