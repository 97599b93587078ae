// SPDX-License-Identifier: Apache-2.0
//
// Beamsplitter matrices and their composition into N-mode unitaries.

#pragma once

#include <string>
#include <vector>

#include "lopsim/fock.hpp"

namespace lopsim {

/// Which of the two ports picks up the minus sign on reflection.
enum class FlipPort { first, second };

struct BeamsplitterSpec {
    std::string label;
    int port_a = 0;
    int port_b = 1;
    double reflectivity = 0.5;
    FlipPort flip = FlipPort::second;
};

/// Phase-asymmetric beamsplitter with reflectivity eta:
///
///   flip=second:  [[ sqrt(eta), sqrt(1-eta)], [sqrt(1-eta), -sqrt(eta)]]
///   flip=first:   [[-sqrt(eta), sqrt(1-eta)], [sqrt(1-eta),  sqrt(eta)]]
///
/// Real orthogonal, det = -1. Throws std::invalid_argument outside [0,1].
Eigen::Matrix2cd beamsplitter_matrix(double eta, FlipPort flip);

/// Rotation splitting a mode into matched/mismatched components:
/// [[sqrt(xi), sqrt(1-xi)], [-sqrt(1-xi), sqrt(xi)]]. det = +1, so this is
/// deliberately a different convention from beamsplitter_matrix.
Eigen::Matrix2cd mode_match_matrix(double xi);

/// Identity everywhere except rows/columns {i, j}, which carry `m`.
ModeTransform embed_two_mode(int mode_count, int i, int j,
                             const Eigen::Matrix2cd& m);

ModeTransform embed_beamsplitter(int mode_count, const BeamsplitterSpec& spec);

/// Single transform equivalent to applying the stages in physical order:
/// compose({A, B, C}) = C * B * A, so that Heisenberg rows chain correctly
/// (the output operators of one stage are the input operators of the next).
ModeTransform compose(const std::vector<ModeTransform>& stages);
ModeTransform compose(const ModeTransform& first, const ModeTransform& then);

/// Max-abs-entry test of ||U^dag U - I||.
bool is_unitary(const ModeTransform& u, double tol = 1e-12);
double unitarity_defect(const ModeTransform& u);

}  // namespace lopsim
