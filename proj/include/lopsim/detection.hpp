// SPDX-License-Identifier: Apache-2.0
//
// Coincidence post-selection and detector-group expectation values.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lopsim/fock.hpp"

namespace lopsim {

/// Output-mode indices whose photon counts one physical detector sums.
struct DetectorGroup {
    std::string label;
    std::vector<int> modes;
};

/// Rows = inputs, columns = detector pairs, entries = coincidence
/// expectation values normalized to the input pair rate.
struct RateTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<double>> values;

    double at(int row, int col) const { return values.at(row).at(col); }
};

/// <(sum_{i in a} n_i)(sum_{j in b} n_j)> evaluated diagonally in the Fock
/// basis. Groups must be disjoint; bunched events (both photons on one
/// group) contribute zero to the product and are thereby excluded, matching
/// the coincidence-basis definition.
double coincidence_rate(const PureState& state, const DetectorGroup& a,
                        const DetectorGroup& b);

/// One labelled output state per row, one group pair per column.
RateTable coincidence_table(
    const std::vector<std::pair<std::string, PureState>>& inputs,
    const std::vector<std::pair<DetectorGroup, DetectorGroup>>& pairs);

struct PostselectResult {
    /// Squared norm of the kept part. Zero (below 1e-15) means the
    /// post-selection is empty and `state` is absent.
    double probability = 0.0;
    std::optional<PureState> state;
};

/// Keeps kets with exactly one photon total in `control` and one in
/// `target`, renormalizing the kept part. An empty post-selection is
/// reported through the result, not an exception.
PostselectResult postselect_coincidence(const PureState& state,
                                        const std::vector<int>& control,
                                        const std::vector<int>& target);

}  // namespace lopsim
