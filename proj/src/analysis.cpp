// SPDX-License-Identifier: Apache-2.0

#include "lopsim/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace lopsim {

namespace {

std::vector<std::pair<DetectorGroup, DetectorGroup>> control_target_pairs(
    const std::vector<DetectorGroup>& groups) {
    // groups = {c-side pair, c-side pair, t-side, t-side}; columns in the
    // order c1:tH, c2:tH, c1:tV, c2:tV for analyzer tables and
    // cH:tH, cH:tV, cV:tH, cV:tV for logical tables.
    return {{groups[0], groups[2]},
            {groups[1], groups[2]},
            {groups[0], groups[3]},
            {groups[1], groups[3]}};
}

}  // namespace

RateTable logical_rate_table(const GateParams& params) {
    GateCircuit gate = params.xi == 1.0 ? build_cnot(params)
                                        : build_cnot_mismatch(params);
    auto groups = logical_detectors(gate.layout);
    // logical tables order columns per control detector first
    std::vector<std::pair<DetectorGroup, DetectorGroup>> pairs = {
        {groups[0], groups[2]},
        {groups[0], groups[3]},
        {groups[1], groups[2]},
        {groups[1], groups[3]},
    };

    const Complex one{1.0, 0.0};
    std::vector<std::pair<std::string, PureState>> outputs;
    auto add = [&](const char* label, Complex a, Complex b, Complex c, Complex d) {
        outputs.emplace_back(
            label, transform_state(logical_input_state(a, b, c, d, gate.layout),
                                   gate.transform));
    };
    add("HH", one, 0.0, 0.0, 0.0);
    add("HV", 0.0, one, 0.0, 0.0);
    add("VH", 0.0, 0.0, one, 0.0);
    add("VV", 0.0, 0.0, 0.0, one);
    return coincidence_table(outputs, pairs);
}

RateTable bell_rate_table(const GateParams& params) {
    GateCircuit gate = params.xi == 1.0 ? build_cnot(params)
                                        : build_cnot_mismatch(params);
    GateCircuit analyzer = append_bell_analyzer(gate);
    auto pairs = control_target_pairs(bell_detectors(analyzer.layout));

    std::vector<std::pair<std::string, PureState>> outputs;
    for (BellState kind : kBellStates)
        outputs.emplace_back(
            to_string(kind),
            transform_state(bell_input_state(kind, analyzer.layout),
                            analyzer.transform));
    return coincidence_table(outputs, pairs);
}

double bell_error_probability(const RateTable& table, BellState input,
                              const BellSignatureMap& sig) {
    if (table.col_labels.size() != 4)
        throw std::invalid_argument("bell_error_probability: table must have 4 pair columns");
    int row = -1;
    for (size_t r = 0; r < table.row_labels.size(); ++r)
        if (table.row_labels[r] == to_string(input)) row = static_cast<int>(r);
    if (row < 0)
        throw std::invalid_argument("bell_error_probability: input row missing");

    const int signature = sig.signature_column.at(input);
    double total = 0.0;
    double wrong = 0.0;
    for (int col = 0; col < 4; ++col) {
        total += table.at(row, col);
        if (col != signature) wrong += table.at(row, col);
    }
    if (total <= 0.0) return 0.0;  // degenerate: no signature counts at all
    return wrong / total;
}

std::vector<double> grid_values(const Range& range) {
    if (range.count < 1)
        throw std::invalid_argument("grid_values: count must be positive");
    if (range.count == 1) {
        if (range.lo != range.hi)
            throw std::invalid_argument("grid_values: single point needs lo == hi");
        return {range.lo};
    }
    std::vector<double> values;
    values.reserve(range.count);
    const double step = (range.hi - range.lo) / (range.count - 1);
    for (int i = 0; i < range.count; ++i)
        values.push_back(i + 1 == range.count ? range.hi : range.lo + step * i);
    return values;
}

namespace {

ErrorReport evaluate_point(const GateParams& params) {
    RateTable table = bell_rate_table(params);
    BellSignatureMap sig;
    ErrorReport report;
    report.eta = params.eta;
    report.eta_prime = params.eta_prime;
    report.xi = params.xi;
    for (size_t i = 0; i < kBellStates.size(); ++i) {
        report.error[i] = bell_error_probability(table, kBellStates[i], sig);
        double total = 0.0;
        for (int col = 0; col < 4; ++col) total += table.at(static_cast<int>(i), col);
        report.total_rate[i] = total;
    }
    return report;
}

}  // namespace

std::vector<ErrorReport> sweep_beamsplitter(const Range& eta,
                                            const Range& eta_prime) {
    auto etas = grid_values(eta);
    auto etaps = grid_values(eta_prime);
    std::vector<ErrorReport> reports;
    reports.reserve(etas.size() * etaps.size());
    for (double e : etas)
        for (double ep : etaps)
            reports.push_back(evaluate_point({e, ep, 1.0}));
    return reports;
}

std::vector<ErrorReport> sweep_mismatch(const Range& xi) {
    std::vector<ErrorReport> reports;
    auto xis = grid_values(xi);
    reports.reserve(xis.size());
    GateParams params;
    for (double x : xis) {
        params.xi = x;
        reports.push_back(evaluate_point(params));
    }
    return reports;
}

}  // namespace lopsim
