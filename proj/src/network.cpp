// SPDX-License-Identifier: Apache-2.0

#include "lopsim/network.hpp"

#include <cmath>
#include <stdexcept>

namespace lopsim {

Eigen::Matrix2cd beamsplitter_matrix(double eta, FlipPort flip) {
    if (!(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("beamsplitter_matrix: reflectivity outside [0,1]");
    const double r = std::sqrt(eta);
    const double t = std::sqrt(1.0 - eta);
    Eigen::Matrix2cd m;
    if (flip == FlipPort::second)
        m << r, t, t, -r;
    else
        m << -r, t, t, r;
    return m;
}

Eigen::Matrix2cd mode_match_matrix(double xi) {
    if (!(xi >= 0.0 && xi <= 1.0))
        throw std::invalid_argument("mode_match_matrix: xi outside [0,1]");
    const double a = std::sqrt(xi);
    const double b = std::sqrt(1.0 - xi);
    Eigen::Matrix2cd m;
    m << a, b, -b, a;
    return m;
}

ModeTransform embed_two_mode(int mode_count, int i, int j,
                             const Eigen::Matrix2cd& m) {
    if (i == j) throw std::invalid_argument("embed_two_mode: identical ports");
    if (i < 0 || j < 0 || i >= mode_count || j >= mode_count)
        throw std::invalid_argument("embed_two_mode: port index out of range");
    ModeTransform u = ModeTransform::Identity(mode_count, mode_count);
    u(i, i) = m(0, 0);
    u(i, j) = m(0, 1);
    u(j, i) = m(1, 0);
    u(j, j) = m(1, 1);
    return u;
}

ModeTransform embed_beamsplitter(int mode_count, const BeamsplitterSpec& spec) {
    return embed_two_mode(mode_count, spec.port_a, spec.port_b,
                          beamsplitter_matrix(spec.reflectivity, spec.flip));
}

ModeTransform compose(const std::vector<ModeTransform>& stages) {
    if (stages.empty())
        throw std::invalid_argument("compose: no stages");
    ModeTransform result = stages.front();
    for (size_t i = 1; i < stages.size(); ++i) {
        if (stages[i].rows() != result.rows() || stages[i].cols() != result.cols())
            throw std::invalid_argument("compose: dimension mismatch");
        result = stages[i] * result;
    }
    return result;
}

ModeTransform compose(const ModeTransform& first, const ModeTransform& then) {
    return compose(std::vector<ModeTransform>{first, then});
}

double unitarity_defect(const ModeTransform& u) {
    if (u.rows() != u.cols())
        throw std::invalid_argument("unitarity_defect: matrix not square");
    if (u.rows() == 0) return 0.0;
    ModeTransform gram = u.adjoint() * u;
    gram -= ModeTransform::Identity(u.rows(), u.cols());
    return gram.cwiseAbs().maxCoeff();
}

bool is_unitary(const ModeTransform& u, double tol) {
    return unitarity_defect(u) <= tol;
}

}  // namespace lopsim
