// SPDX-License-Identifier: Apache-2.0
//
// The post-selected CNOT networks: ideal gate, general-reflectivity gate,
// mode-mismatch gate, Bell analyzer stage, and the standard input states.

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "lopsim/detection.hpp"
#include "lopsim/fock.hpp"
#include "lopsim/network.hpp"

namespace lopsim {

/// Mode bookkeeping for a built circuit. `modes[i]` is the input-mode name of
/// slot i; `outputs` maps output-port names (e.g. "cV_m", "cS1") to the slot
/// that carries them after the cascade.
struct CircuitLayout {
    std::vector<std::string> modes;
    std::map<std::string, int> outputs;

    int mode_count() const { return static_cast<int>(modes.size()); }
    int index(const std::string& name) const;   // input mode name -> slot
    int output(const std::string& name) const;  // output port name -> slot
    bool has_output(const std::string& name) const;
};

/// Gate parameters. eta is the reflectivity shared by the three nominally
/// 33:67 beamsplitters, eta_prime the one shared by the two nominally 50:50
/// beamsplitters, xi the mode-match fraction at the central beamsplitter.
struct GateParams {
    double eta = 1.0 / 3.0;
    double eta_prime = 0.5;
    double xi = 1.0;
};

struct GateCircuit {
    ModeTransform transform;
    CircuitLayout layout;
};

/// 6-mode gate (cH, cV, tH, tV, vc, vt): target split on a 50:50, the three
/// eta beamsplitters in parallel, target remix on the second 50:50. xi is
/// ignored. Output ports cH_O..vt_O sit on their input slots.
GateCircuit build_cnot(const GateParams& params);

/// 9-mode gate adding v1, v2, v3: the control's cV component is first split
/// into matched/mismatched parts (mode_match_matrix(xi)); the mismatched part
/// traverses copies of the central and remix beamsplitters against vacuum
/// modes. Extra output ports: cV_m, tH_m, tV_m.
GateCircuit build_cnot_mismatch(const GateParams& params);

/// Appends the 50:50 control-output analyzer: cS1 = (cH_O + cV_O)/sqrt(2),
/// cS2 = (cH_O - cV_O)/sqrt(2). On a 9-mode gate also adds mode v4 and the
/// mirror pair cS1M = (v4 + cV_m)/sqrt(2), cS2M = (v4 - cV_m)/sqrt(2).
GateCircuit append_bell_analyzer(const GateCircuit& gate);

/// alpha|HH> + beta|HV> + gamma|VH> + delta|VV> with every ancilla in vacuum,
/// mapped onto the layout's cH/cV/tH/tV slots. The coefficient vector is
/// normalized; the zero vector is a domain error.
PureState logical_input_state(Complex alpha, Complex beta, Complex gamma,
                              Complex delta, const CircuitLayout& layout);

/// Bell-state naming convention used throughout:
///   psi+- = (|HH> +- |VV>)/sqrt(2),  phi+- = (|HV> +- |VH>)/sqrt(2).
/// Note this swaps the textbook psi/phi assignment; detector signatures and
/// emitted tables follow this naming.
enum class BellState { psi_plus, psi_minus, phi_plus, phi_minus };

constexpr std::array<BellState, 4> kBellStates = {
    BellState::psi_plus, BellState::psi_minus, BellState::phi_plus,
    BellState::phi_minus};

std::string to_string(BellState kind);

PureState bell_input_state(BellState kind, const CircuitLayout& layout);

/// Logical detector groups cH_D, cV_D, tH_D, tV_D. On a mismatch layout each
/// physical detector also sums the corresponding mismatch output port.
std::vector<DetectorGroup> logical_detectors(const CircuitLayout& layout);

/// Analyzer detector groups cS1_D, cS2_D, tH_D, tV_D (mirror ports included
/// when present).
std::vector<DetectorGroup> bell_detectors(const CircuitLayout& layout);

}  // namespace lopsim
