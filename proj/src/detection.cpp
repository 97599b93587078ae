// SPDX-License-Identifier: Apache-2.0

#include "lopsim/detection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lopsim {

namespace {

int group_count(const FockState& ket, const DetectorGroup& g) {
    int n = 0;
    for (int mode : g.modes) n += ket[mode];
    return n;
}

void check_group(const PureState& state, const DetectorGroup& g) {
    for (int mode : g.modes)
        if (mode < 0 || mode >= state.mode_count())
            throw std::invalid_argument("detector group '" + g.label +
                                        "' references mode out of range");
}

}  // namespace

double coincidence_rate(const PureState& state, const DetectorGroup& a,
                        const DetectorGroup& b) {
    check_group(state, a);
    check_group(state, b);
    for (int mode : a.modes)
        if (std::find(b.modes.begin(), b.modes.end(), mode) != b.modes.end())
            throw std::invalid_argument("coincidence_rate: groups '" + a.label +
                                        "' and '" + b.label + "' overlap");

    double rate = 0.0;
    for (const auto& [ket, amp] : state.terms()) {
        int na = group_count(ket, a);
        if (na == 0) continue;
        int nb = group_count(ket, b);
        if (nb == 0) continue;
        rate += std::norm(amp) * na * nb;
    }
    return rate;
}

RateTable coincidence_table(
    const std::vector<std::pair<std::string, PureState>>& inputs,
    const std::vector<std::pair<DetectorGroup, DetectorGroup>>& pairs) {
    RateTable table;
    for (const auto& [a, b] : pairs)
        table.col_labels.push_back(a.label + ":" + b.label);
    for (const auto& [label, state] : inputs) {
        table.row_labels.push_back(label);
        std::vector<double> row;
        row.reserve(pairs.size());
        for (const auto& [a, b] : pairs)
            row.push_back(coincidence_rate(state, a, b));
        table.values.push_back(std::move(row));
    }
    return table;
}

PostselectResult postselect_coincidence(const PureState& state,
                                        const std::vector<int>& control,
                                        const std::vector<int>& target) {
    for (int mode : control)
        if (std::find(target.begin(), target.end(), mode) != target.end())
            throw std::invalid_argument(
                "postselect_coincidence: control and target sets overlap");

    DetectorGroup c{"control", control};
    DetectorGroup t{"target", target};
    check_group(state, c);
    check_group(state, t);

    PureState kept(state.mode_count());
    double prob = 0.0;
    for (const auto& [ket, amp] : state.terms()) {
        if (group_count(ket, c) != 1 || group_count(ket, t) != 1) continue;
        kept.accumulate(ket, amp);
        prob += std::norm(amp);
    }

    PostselectResult result;
    result.probability = prob;
    if (prob >= 1e-15) result.state = kept.normalized();
    return result;
}

}  // namespace lopsim
