// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "lopsim/network.hpp"
#include "test_util.hpp"

using namespace lopsim;
using lopsim_test::random_network;

namespace {

// Near-miss variant of the six-mode gate rows: the last row carries +tV
// instead of -tV, leaving it non-orthogonal to the tV row (inner product 2/3).
ModeTransform gate_rows_with_sign_defect() {
    const double s = 1.0 / std::sqrt(3.0);
    const double r2 = std::sqrt(2.0);
    ModeTransform u(6, 6);
    u.setZero();
    // cH_O, cV_O, tH_O, tV_O, vc_O over (cH, cV, tH, tV, vc, vt)
    u(0, 0) = s;        u(0, 4) = r2 * s;
    u(1, 1) = -s;       u(1, 2) = s;      u(1, 3) = s;
    u(2, 1) = s;        u(2, 2) = s;      u(2, 5) = s;
    u(3, 1) = s;        u(3, 3) = s;      u(3, 5) = -s;
    u(4, 0) = r2 * s;   u(4, 4) = -s;
    u(5, 2) = s;        u(5, 3) = s;      u(5, 5) = -s;
    return u;
}

}  // namespace

TEST_CASE("beamsplitter_matrix conventions") {
    auto m = beamsplitter_matrix(1.0 / 3.0, FlipPort::second);
    CHECK(m(0, 0).real() == doctest::Approx(std::sqrt(1.0 / 3.0)));
    CHECK(m(0, 1).real() == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(m(1, 0).real() == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(m(1, 1).real() == doctest::Approx(-std::sqrt(1.0 / 3.0)));

    auto mirror = beamsplitter_matrix(1.0, FlipPort::second);
    CHECK(mirror(0, 0) == Complex{1.0, 0.0});
    CHECK(mirror(1, 1) == Complex{-1.0, 0.0});
    CHECK(mirror(0, 1) == Complex{0.0, 0.0});

    auto swap = beamsplitter_matrix(0.0, FlipPort::second);
    CHECK(swap(0, 0) == Complex{0.0, 0.0});
    CHECK(swap(0, 1) == Complex{1.0, 0.0});
    CHECK(swap(1, 0) == Complex{1.0, 0.0});

    auto flipped = beamsplitter_matrix(0.25, FlipPort::first);
    CHECK(flipped(0, 0).real() == doctest::Approx(-0.5));
    CHECK(flipped(1, 1).real() == doctest::Approx(0.5));

    CHECK_THROWS_AS(beamsplitter_matrix(-0.1, FlipPort::second),
                    std::invalid_argument);
    CHECK_THROWS_AS(beamsplitter_matrix(1.1, FlipPort::second),
                    std::invalid_argument);
}

TEST_CASE("beamsplitter determinant is -1 for all reflectivities") {
    std::mt19937 rng(4001);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        double eta = dist(rng);
        for (auto flip : {FlipPort::first, FlipPort::second}) {
            auto m = beamsplitter_matrix(eta, flip);
            CHECK(m.determinant().real() == doctest::Approx(-1.0).epsilon(1e-13));
            CHECK(is_unitary(m, 1e-12));
        }
    }
}

TEST_CASE("mode_match_matrix is a rotation") {
    CHECK(mode_match_matrix(1.0).isApprox(Eigen::Matrix2cd::Identity(), 1e-15));

    auto swapped = mode_match_matrix(0.0);
    CHECK(swapped(0, 1) == Complex{1.0, 0.0});
    CHECK(swapped(1, 0) == Complex{-1.0, 0.0});

    auto quarter = mode_match_matrix(0.25);
    CHECK(quarter(0, 0).real() == doctest::Approx(0.5));
    CHECK(quarter(0, 1).real() == doctest::Approx(std::sqrt(0.75)));
    CHECK(quarter(1, 0).real() == doctest::Approx(-std::sqrt(0.75)));
    CHECK(quarter(1, 1).real() == doctest::Approx(0.5));
    CHECK(quarter.determinant().real() == doctest::Approx(1.0));

    CHECK_THROWS_AS(mode_match_matrix(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(mode_match_matrix(1.01), std::invalid_argument);
}

TEST_CASE("embed_two_mode places the block and keeps unitarity") {
    auto id2 = Eigen::Matrix2cd::Identity();
    CHECK(embed_two_mode(4, 1, 3, id2)
              .isApprox(ModeTransform::Identity(4, 4), 1e-15));

    auto half = beamsplitter_matrix(0.5, FlipPort::second);
    ModeTransform u = embed_two_mode(3, 0, 2, half);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(u(0, 0).real() == doctest::Approx(r));
    CHECK(u(0, 2).real() == doctest::Approx(r));
    CHECK(u(2, 0).real() == doctest::Approx(r));
    CHECK(u(2, 2).real() == doctest::Approx(-r));
    CHECK(u(1, 1) == Complex{1.0, 0.0});
    CHECK(u(1, 0) == Complex{0.0, 0.0});
    CHECK(is_unitary(u, 1e-12));

    CHECK_THROWS_AS(embed_two_mode(3, 1, 1, half), std::invalid_argument);
    CHECK_THROWS_AS(embed_two_mode(3, 0, 3, half), std::invalid_argument);
}

TEST_CASE("embeddings on disjoint pairs commute") {
    std::mt19937 rng(4002);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        auto m1 = beamsplitter_matrix(dist(rng), FlipPort::second);
        auto m2 = beamsplitter_matrix(dist(rng), FlipPort::first);
        ModeTransform a = embed_two_mode(6, 0, 3, m1);
        ModeTransform b = embed_two_mode(6, 1, 5, m2);
        CHECK((a * b - b * a).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("compose applies stages in physical order") {
    std::mt19937 rng(4003);
    ModeTransform u = random_network(rng, 4, 6);
    CHECK(compose({u}).isApprox(u, 1e-15));
    CHECK(compose(u, u.adjoint()).isApprox(ModeTransform::Identity(4, 4), 1e-12));

    ModeTransform v = random_network(rng, 4, 6);
    ModeTransform w = random_network(rng, 4, 6);
    // associativity
    ModeTransform left = compose(compose(u, v), w);
    ModeTransform right = compose(u, compose(v, w));
    CHECK((left - right).cwiseAbs().maxCoeff() < 1e-12);
    // physical order means later stages multiply from the left
    CHECK(compose({u, v, w}).isApprox(w * v * u, 1e-13));

    ModeTransform small = ModeTransform::Identity(3, 3);
    CHECK_THROWS_AS(compose(u, small), std::invalid_argument);
}

TEST_CASE("is_unitary accepts the gate and rejects a sign defect") {
    CHECK(is_unitary(ModeTransform::Identity(5, 5), 1e-12));

    std::mt19937 rng(4004);
    CHECK(is_unitary(random_network(rng, 6, 10), 1e-12));

    ModeTransform defective = gate_rows_with_sign_defect();
    CHECK_FALSE(is_unitary(defective, 1e-12));
    // the defect is macroscopic, not a rounding artifact
    CHECK(unitarity_defect(defective) > 0.1);
}
