// SPDX-License-Identifier: Apache-2.0

#include "lopsim/circuits.hpp"

#include <cmath>
#include <stdexcept>

namespace lopsim {

namespace {

void check_params(const GateParams& p) {
    if (!(p.eta >= 0.0 && p.eta <= 1.0))
        throw std::invalid_argument("GateParams: eta outside [0,1]");
    if (!(p.eta_prime >= 0.0 && p.eta_prime <= 1.0))
        throw std::invalid_argument("GateParams: eta_prime outside [0,1]");
    if (!(p.xi >= 0.0 && p.xi <= 1.0))
        throw std::invalid_argument("GateParams: xi outside [0,1]");
}

ModeTransform bs(int n, int a, int b, double eta) {
    return embed_two_mode(n, a, b, beamsplitter_matrix(eta, FlipPort::second));
}

// The recombining beamsplitter of the target interferometer. Between the
// splitting and remixing elements the arms cross, so a reflectivity-eta'
// recombiner couples each input rail to the opposite output rail: the
// straight-through transfer of the interferometer is 2*sqrt(eta'(1-eta'))
// and vanishing cross-talk appears only at eta' = 1/2. In matrix terms that
// is the eta -> 1-eta mirror of the splitting element.
ModeTransform remix_bs(int n, int a, int b, double eta_prime) {
    return embed_two_mode(n, a, b,
                          beamsplitter_matrix(1.0 - eta_prime, FlipPort::second));
}

}  // namespace

int CircuitLayout::index(const std::string& name) const {
    for (int i = 0; i < mode_count(); ++i)
        if (modes[i] == name) return i;
    throw std::invalid_argument("CircuitLayout: unknown mode '" + name + "'");
}

int CircuitLayout::output(const std::string& name) const {
    auto it = outputs.find(name);
    if (it == outputs.end())
        throw std::invalid_argument("CircuitLayout: unknown output port '" + name + "'");
    return it->second;
}

bool CircuitLayout::has_output(const std::string& name) const {
    return outputs.count(name) != 0;
}

GateCircuit build_cnot(const GateParams& params) {
    check_params(params);
    const double eta = params.eta;
    const double etap = params.eta_prime;

    CircuitLayout layout;
    layout.modes = {"cH", "cV", "tH", "tV", "vc", "vt"};
    const int cH = 0, cV = 1, tH = 2, tV = 3, vc = 4, vt = 5;
    const int n = 6;

    // target split, the three parallel eta beamsplitters, target remix
    ModeTransform u = compose({
        bs(n, tH, tV, etap),        // B3
        bs(n, cH, vc, eta),         // B1
        bs(n, tH, cV, eta),         // B2
        bs(n, tV, vt, eta),         // B5
        remix_bs(n, tH, tV, etap),  // B4
    });

    layout.outputs = {{"cH_O", cH}, {"cV_O", cV}, {"tH_O", tH},
                      {"tV_O", tV}, {"vc_O", vc}, {"vt_O", vt}};
    return {std::move(u), std::move(layout)};
}

GateCircuit build_cnot_mismatch(const GateParams& params) {
    check_params(params);
    const double eta = params.eta;
    const double etap = params.eta_prime;

    CircuitLayout layout;
    layout.modes = {"cH", "cV", "tH", "tV", "vc", "vt", "v1", "v2", "v3"};
    const int cH = 0, cV = 1, tH = 2, tV = 3, vc = 4, vt = 5;
    const int v1 = 6, v2 = 7, v3 = 8;
    const int n = 9;

    // The cV component splits into a matched part (stays on the cV slot and
    // meets B2 as usual) and a mismatched part (slot v1), which runs through
    // copies of B2 and B4 against the fresh vacuum modes v2 and v3.
    ModeTransform u = compose({
        bs(n, tH, tV, etap),                              // B3
        embed_two_mode(n, cV, v1, mode_match_matrix(params.xi)),
        bs(n, cH, vc, eta),                               // B1
        bs(n, tH, cV, eta),                               // B2
        bs(n, v2, v1, eta),                               // B2 copy
        bs(n, tV, vt, eta),                               // B5
        remix_bs(n, tH, tV, etap),                        // B4
        remix_bs(n, v2, v3, etap),                        // B4 copy
    });

    layout.outputs = {{"cH_O", cH}, {"cV_O", cV}, {"tH_O", tH},
                      {"tV_O", tV}, {"vc_O", vc}, {"vt_O", vt},
                      {"cV_m", v1}, {"tH_m", v2}, {"tV_m", v3}};
    return {std::move(u), std::move(layout)};
}

GateCircuit append_bell_analyzer(const GateCircuit& gate) {
    if (!gate.layout.has_output("cH_O") || !gate.layout.has_output("cV_O"))
        throw std::invalid_argument("append_bell_analyzer: layout has no control outputs");

    const int slot_ch = gate.layout.output("cH_O");
    const int slot_cv = gate.layout.output("cV_O");
    CircuitLayout layout = gate.layout;

    if (!gate.layout.has_output("cV_m")) {
        const int n = gate.layout.mode_count();
        ModeTransform u = compose(gate.transform, bs(n, slot_ch, slot_cv, 0.5));
        layout.outputs.erase("cH_O");
        layout.outputs.erase("cV_O");
        layout.outputs["cS1"] = slot_ch;
        layout.outputs["cS2"] = slot_cv;
        return {std::move(u), std::move(layout)};
    }

    // Mismatch gate: add v4 to mirror the analyzer on the cV_m port.
    const int n = gate.layout.mode_count() + 1;
    const int v4 = n - 1;
    const int slot_cvm = gate.layout.output("cV_m");

    ModeTransform extended = ModeTransform::Identity(n, n);
    extended.topLeftCorner(n - 1, n - 1) = gate.transform;

    ModeTransform u = compose({extended,
                               bs(n, slot_ch, slot_cv, 0.5),
                               bs(n, v4, slot_cvm, 0.5)});

    layout.modes.push_back("v4");
    layout.outputs.erase("cH_O");
    layout.outputs.erase("cV_O");
    layout.outputs.erase("cV_m");
    layout.outputs["cS1"] = slot_ch;
    layout.outputs["cS2"] = slot_cv;
    layout.outputs["cS1M"] = v4;
    layout.outputs["cS2M"] = slot_cvm;
    return {std::move(u), std::move(layout)};
}

PureState logical_input_state(Complex alpha, Complex beta, Complex gamma,
                              Complex delta, const CircuitLayout& layout) {
    double nrm2 = std::norm(alpha) + std::norm(beta) + std::norm(gamma) +
                  std::norm(delta);
    if (nrm2 <= 0.0)
        throw std::invalid_argument("logical_input_state: zero coefficient vector");
    const double scale = 1.0 / std::sqrt(nrm2);

    const int n = layout.mode_count();
    const int ch = layout.index("cH");
    const int cv = layout.index("cV");
    const int th = layout.index("tH");
    const int tv = layout.index("tV");

    PureState state(n);
    auto add = [&](Complex c, int control, int target) {
        if (c == Complex{0.0, 0.0}) return;
        FockState ket(n, 0);
        ket[control] += 1;
        ket[target] += 1;
        state.accumulate(ket, c * scale);
    };
    add(alpha, ch, th);
    add(beta, ch, tv);
    add(gamma, cv, th);
    add(delta, cv, tv);
    return state;
}

std::string to_string(BellState kind) {
    switch (kind) {
        case BellState::psi_plus: return "psi+";
        case BellState::psi_minus: return "psi-";
        case BellState::phi_plus: return "phi+";
        case BellState::phi_minus: return "phi-";
    }
    throw std::invalid_argument("to_string: bad BellState");
}

PureState bell_input_state(BellState kind, const CircuitLayout& layout) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case BellState::psi_plus:
            return logical_input_state(r, 0.0, 0.0, r, layout);
        case BellState::psi_minus:
            return logical_input_state(r, 0.0, 0.0, -r, layout);
        case BellState::phi_plus:
            return logical_input_state(0.0, r, r, 0.0, layout);
        case BellState::phi_minus:
            return logical_input_state(0.0, r, -r, 0.0, layout);
    }
    throw std::invalid_argument("bell_input_state: bad BellState");
}

namespace {

DetectorGroup group_for(const CircuitLayout& layout, const std::string& label,
                        const std::string& primary, const std::string& mirror) {
    DetectorGroup g{label, {layout.output(primary)}};
    if (layout.has_output(mirror)) g.modes.push_back(layout.output(mirror));
    return g;
}

}  // namespace

std::vector<DetectorGroup> logical_detectors(const CircuitLayout& layout) {
    return {
        group_for(layout, "cH", "cH_O", "cH_m"),
        group_for(layout, "cV", "cV_O", "cV_m"),
        group_for(layout, "tH", "tH_O", "tH_m"),
        group_for(layout, "tV", "tV_O", "tV_m"),
    };
}

std::vector<DetectorGroup> bell_detectors(const CircuitLayout& layout) {
    return {
        group_for(layout, "cS1", "cS1", "cS1M"),
        group_for(layout, "cS2", "cS2", "cS2M"),
        group_for(layout, "tH", "tH_O", "tH_m"),
        group_for(layout, "tV", "tV_O", "tV_m"),
    };
}

}  // namespace lopsim
