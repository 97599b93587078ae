// SPDX-License-Identifier: Apache-2.0

#include "lopsim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lopsim {

namespace {

constexpr double kDropTolerance = 1e-15;

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

int total_photons(const FockState& ket) {
    return std::accumulate(ket.begin(), ket.end(), 0);
}

std::vector<FockState> enumerate_fock_states(int mode_count, int photons) {
    std::vector<FockState> out;
    FockState ket(mode_count, 0);
    // lexicographic recursion over occupation vectors
    auto recurse = [&](auto&& self, int mode, int remaining) -> void {
        if (mode == mode_count) {
            if (remaining == 0) out.push_back(ket);
            return;
        }
        for (int n = 0; n <= remaining; ++n) {
            ket[mode] = n;
            self(self, mode + 1, remaining - n);
        }
        ket[mode] = 0;
    };
    recurse(recurse, 0, photons);
    return out;
}

PureState::PureState(int mode_count, TermMap terms)
    : mode_count_(mode_count), terms_(std::move(terms)) {
    for (const auto& [ket, amp] : terms_) {
        if (static_cast<int>(ket.size()) != mode_count_)
            throw std::invalid_argument("PureState: ket length != mode count");
        if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag()))
            throw std::invalid_argument("PureState: non-finite amplitude");
    }
}

Complex PureState::amplitude(const FockState& ket) const {
    auto it = terms_.find(ket);
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

void PureState::accumulate(const FockState& ket, Complex amp) {
    if (static_cast<int>(ket.size()) != mode_count_)
        throw std::invalid_argument("PureState: ket length != mode count");
    auto it = terms_.find(ket);
    if (it == terms_.end()) {
        if (std::abs(amp) > 0.0) terms_.emplace(ket, amp);
        return;
    }
    it->second += amp;
    if (std::abs(it->second) < kDropTolerance) terms_.erase(it);
}

double PureState::norm() const {
    double sum = 0.0;
    for (const auto& [ket, amp] : terms_) sum += std::norm(amp);
    return std::sqrt(sum);
}

PureState PureState::normalized() const {
    double n = norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize a zero state");
    PureState result(mode_count_);
    for (const auto& [ket, amp] : terms_) result.accumulate(ket, amp / n);
    return result;
}

PureState basis_state(int mode_count, const std::vector<int>& occupied) {
    FockState ket(mode_count, 0);
    for (int mode : occupied) {
        if (mode < 0 || mode >= mode_count)
            throw std::invalid_argument("basis_state: mode index out of range");
        ++ket[mode];
    }
    PureState state(mode_count);
    state.accumulate(ket, Complex{1.0, 0.0});
    return state;
}

PureState vacuum_state(int mode_count) { return basis_state(mode_count, {}); }

double norm(const PureState& state) { return state.norm(); }

Complex inner_product(const PureState& a, const PureState& b) {
    if (a.mode_count() != b.mode_count())
        throw std::invalid_argument("inner_product: mode count mismatch");
    // iterate over the smaller map
    const PureState& small = a.terms().size() <= b.terms().size() ? a : b;
    const PureState& large = a.terms().size() <= b.terms().size() ? b : a;
    Complex sum{0.0, 0.0};
    for (const auto& [ket, amp] : small.terms()) {
        Complex other = large.amplitude(ket);
        if (&small == &a)
            sum += std::conj(amp) * other;
        else
            sum += std::conj(other) * amp;
    }
    return sum;
}

PureState transform_state(const PureState& state, const ModeTransform& u) {
    const int n = state.mode_count();
    if (u.rows() != n || u.cols() != n)
        throw std::invalid_argument("transform_state: dimension mismatch");

    PureState result(n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    for (const auto& [ket, amp] : state.terms()) {
        int photons = total_photons(ket);
        if (photons > 2)
            throw std::invalid_argument(
                "transform_state supports at most two photons per term; use "
                "transition_amplitude for higher photon numbers");

        if (photons == 0) {
            result.accumulate(ket, amp);
            continue;
        }

        // modes with a photon, one entry per photon
        std::vector<int> sources;
        for (int m = 0; m < n; ++m)
            for (int c = 0; c < ket[m]; ++c) sources.push_back(m);

        if (photons == 1) {
            const int j = sources[0];
            FockState out(n, 0);
            for (int k = 0; k < n; ++k) {
                Complex c = u(k, j);
                if (c == Complex{0.0, 0.0}) continue;
                out[k] = 1;
                result.accumulate(out, amp * c);
                out[k] = 0;
            }
            continue;
        }

        // two photons: expand (sum_k u(k,j1) a^dag_k)(sum_l u(l,j2) a^dag_l)
        const int j1 = sources[0];
        const int j2 = sources[1];
        // a doubly occupied input ket carries 1/sqrt(2!)
        Complex scale = amp * (j1 == j2 ? inv_sqrt2 : 1.0);
        FockState out(n, 0);
        for (int k = 0; k < n; ++k) {
            Complex ck = u(k, j1);
            if (ck == Complex{0.0, 0.0}) continue;
            for (int l = 0; l < n; ++l) {
                Complex cl = u(l, j2);
                if (cl == Complex{0.0, 0.0}) continue;
                Complex w = scale * ck * cl;
                ++out[k];
                ++out[l];
                // a^dag_k a^dag_l |0> = sqrt(2) |2_k> when k == l
                if (k == l) w *= std::sqrt(2.0);
                result.accumulate(out, w);
                --out[k];
                --out[l];
            }
        }
    }
    return result;
}

namespace {

// Ryser's formula over the <= 4x4 occupation-selected submatrix.
Complex permanent(const Eigen::MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    if (n == 0) return Complex{1.0, 0.0};
    Complex total{0.0, 0.0};
    const unsigned full = 1u << n;
    for (unsigned subset = 1; subset < full; ++subset) {
        Complex prod{1.0, 0.0};
        for (int row = 0; row < n; ++row) {
            Complex sum{0.0, 0.0};
            for (int col = 0; col < n; ++col)
                if (subset & (1u << col)) sum += m(row, col);
            prod *= sum;
        }
        int bits = __builtin_popcount(subset);
        total += ((n - bits) % 2 == 0 ? 1.0 : -1.0) * prod;
    }
    return total;
}

}  // namespace

Complex transition_amplitude(const ModeTransform& u, const FockState& in,
                             const FockState& out) {
    const int n = static_cast<int>(u.rows());
    if (u.cols() != n) throw std::invalid_argument("transition_amplitude: U not square");
    if (static_cast<int>(in.size()) != n || static_cast<int>(out.size()) != n)
        throw std::invalid_argument("transition_amplitude: ket length != mode count");

    const int photons = total_photons(in);
    if (total_photons(out) != photons) return Complex{0.0, 0.0};
    if (photons == 0) return Complex{1.0, 0.0};

    // M repeats row k of U out[k] times and column j in[j] times.
    Eigen::MatrixXcd m(photons, photons);
    int row = 0;
    for (int k = 0; k < n; ++k) {
        for (int rep = 0; rep < out[k]; ++rep) {
            int col = 0;
            for (int j = 0; j < n; ++j)
                for (int cj = 0; cj < in[j]; ++cj) m(row, col++) = u(k, j);
            ++row;
        }
    }

    double denom = 1.0;
    for (int j = 0; j < n; ++j) denom *= factorial(in[j]);
    for (int k = 0; k < n; ++k) denom *= factorial(out[k]);
    return permanent(m) / std::sqrt(denom);
}

}  // namespace lopsim
