// SPDX-License-Identifier: Apache-2.0
//
// Few-photon Fock states over labelled modes and their exact propagation
// through a linear mode transform.

#pragma once

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

namespace lopsim {

using Complex = std::complex<double>;

/// Occupation-number vector, one entry per mode. Everything in this library
/// stays at total photon number <= 2, but the type itself is unconstrained.
using FockState = std::vector<int>;

/// N x N complex matrix whose row k expands output mode operator k over the
/// input mode operators (Heisenberg input/output relations).
using ModeTransform = Eigen::MatrixXcd;

int total_photons(const FockState& ket);

/// All occupation vectors of `mode_count` modes with exactly `photons`
/// photons, in lexicographic order.
std::vector<FockState> enumerate_fock_states(int mode_count, int photons);

/// Sparse superposition of orthonormal Fock kets. Stored kets carry the
/// 1/sqrt(n!) bosonic normalization, so probabilities are |amplitude|^2.
/// Immutable by convention: operations return new states.
class PureState {
public:
    using TermMap = std::map<FockState, Complex>;

    explicit PureState(int mode_count) : mode_count_(mode_count) {}
    PureState(int mode_count, TermMap terms);

    int mode_count() const { return mode_count_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Complex amplitude(const FockState& ket) const;

    /// Adds into the amplitude of `ket`; drops the term if it cancels to
    /// (near) zero. Used by builders; resulting states should be normalized.
    void accumulate(const FockState& ket, Complex amp);

    double norm() const;
    PureState normalized() const;

private:
    int mode_count_;
    TermMap terms_;
};

/// Basis ket with one photon in each listed mode (a repeated index means a
/// doubly occupied mode). An empty list yields the vacuum ket.
PureState basis_state(int mode_count, const std::vector<int>& occupied);

PureState vacuum_state(int mode_count);

double norm(const PureState& state);

Complex inner_product(const PureState& a, const PureState& b);

/// Propagates `state` through the network described by the Heisenberg matrix
/// `u`. Each input creation operator is replaced by its image under the
/// adjoint action, a^dag_j -> sum_k u(k,j) a^dag_k, and the resulting
/// degree-<=2 polynomial is expanded over orthonormal kets. Supports total
/// photon number <= 2 per term; use transition_amplitude for more photons.
PureState transform_state(const PureState& state, const ModeTransform& u);

/// Bosonic transition amplitude <out|U|in> computed along an independent
/// route: per(M) / sqrt(prod_j in_j! prod_k out_k!), where M repeats row k of
/// `u` out_k times and column j in_j times. Photon-number mismatch between
/// `in` and `out` gives amplitude 0 by definition. Intended for small photon
/// numbers (n <= 4).
Complex transition_amplitude(const ModeTransform& u, const FockState& in,
                             const FockState& out);

}  // namespace lopsim
