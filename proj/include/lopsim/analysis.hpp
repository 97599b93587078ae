// SPDX-License-Identifier: Apache-2.0
//
// Bell-state discrimination error metric and the two parameter sweeps.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "lopsim/circuits.hpp"
#include "lopsim/detection.hpp"

namespace lopsim {

/// Bijection between Bell inputs and their signature detector pair, as a
/// column index into the 4-column analyzer tables
/// (cS1:tH, cS2:tH, cS1:tV, cS2:tV).
struct BellSignatureMap {
    std::map<BellState, int> signature_column = {
        {BellState::psi_plus, 0},
        {BellState::psi_minus, 1},
        {BellState::phi_plus, 2},
        {BellState::phi_minus, 3},
    };
};

struct ErrorReport {
    double eta = 0.0;
    double eta_prime = 0.0;
    double xi = 1.0;
    /// Indexed like kBellStates: psi+, psi-, phi+, phi-.
    std::array<double, 4> error = {};
    std::array<double, 4> total_rate = {};
};

/// Logical-basis coincidence table (rows HH, HV, VH, VV; columns cH:tH,
/// cH:tV, cV:tH, cV:tV). Uses the 6-mode gate at xi = 1 and the 9-mode
/// mismatch gate otherwise.
RateTable logical_rate_table(const GateParams& params);

/// Bell-input table behind the analyzer (rows psi+, psi-, phi+, phi-;
/// columns cS1:tH, cS2:tH, cS1:tV, cS2:tV).
RateTable bell_rate_table(const GateParams& params);

/// (sum of rates at the three wrong pairs) / (sum at all four pairs) for the
/// given input row; 0 if the total vanishes. The table must have the four
/// signature columns.
double bell_error_probability(const RateTable& table, BellState input,
                              const BellSignatureMap& sig = {});

/// Inclusive linear grid, lo..hi with `count` points (count >= 2, or
/// count == 1 with lo == hi).
struct Range {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
};

std::vector<double> grid_values(const Range& range);

/// One report per (eta, eta_prime) grid point, row-major (eta outer), using
/// the 6-mode gate plus analyzer at each point.
std::vector<ErrorReport> sweep_beamsplitter(const Range& eta,
                                            const Range& eta_prime);

/// One report per xi grid point, using the mismatch gate plus analyzer at
/// ideal reflectivities.
std::vector<ErrorReport> sweep_mismatch(const Range& xi);

}  // namespace lopsim
