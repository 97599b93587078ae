// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "lopsim/circuits.hpp"
#include "lopsim/detection.hpp"

using namespace lopsim;

namespace {

PureState ideal_output(Complex a, Complex b, Complex c, Complex d) {
    static const GateCircuit gate = build_cnot({});
    return transform_state(logical_input_state(a, b, c, d, gate.layout),
                           gate.transform);
}

}  // namespace

TEST_CASE("coincidence_rate on the ideal gate") {
    PureState out = ideal_output(0, 1, 0, 0);  // |H>c |V>t
    DetectorGroup ch{"cH", {0}};
    DetectorGroup tv{"tV", {3}};
    CHECK(coincidence_rate(out, ch, tv) == doctest::Approx(1.0 / 9.0).epsilon(1e-13));

    DetectorGroup overlapping{"bad", {0, 3}};
    CHECK_THROWS_AS(coincidence_rate(out, ch, overlapping), std::invalid_argument);
}

TEST_CASE("coincidence_rate with combined mismatch groups") {
    const double xi = 0.3;
    GateCircuit gate = build_cnot_mismatch({1.0 / 3.0, 0.5, xi});
    PureState out = transform_state(
        logical_input_state(0, 0, 1, 0, gate.layout), gate.transform);

    auto groups = logical_detectors(gate.layout);
    CHECK(coincidence_rate(out, groups[1], groups[2]) ==
          doctest::Approx(2.0 / 9.0 * (1.0 - xi)).epsilon(1e-12));
    CHECK(coincidence_rate(out, groups[1], groups[3]) ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("vacuum groups and vacuum states give zero") {
    PureState out = ideal_output(1, 0, 0, 0);
    // modes that never receive a photon for this input
    DetectorGroup cv{"cV", {1}};
    DetectorGroup tv{"tV", {3}};
    CHECK(coincidence_rate(out, cv, tv) == 0.0);

    PureState vac = vacuum_state(6);
    DetectorGroup a{"a", {0}};
    DetectorGroup b{"b", {2}};
    CHECK(coincidence_rate(vac, a, b) == 0.0);
}

TEST_CASE("group additivity for singly occupied groups") {
    const double xi = 0.45;
    GateCircuit gate = build_cnot_mismatch({1.0 / 3.0, 0.5, xi});
    PureState out = transform_state(
        logical_input_state(0, 0, 1, 0, gate.layout), gate.transform);

    DetectorGroup combined{"cV", {1, 6}};
    DetectorGroup part1{"cV_O", {1}};
    DetectorGroup part2{"cV_m", {6}};
    DetectorGroup target{"tH", {2, 7}};
    double whole = coincidence_rate(out, combined, target);
    double split = coincidence_rate(out, part1, target) +
                   coincidence_rate(out, part2, target);
    CHECK(whole == doctest::Approx(split).epsilon(1e-13));
}

TEST_CASE("coincidence_table assembles rows and columns in order") {
    std::vector<std::pair<std::string, PureState>> inputs;
    inputs.emplace_back("HH", ideal_output(1, 0, 0, 0));
    inputs.emplace_back("VH", ideal_output(0, 0, 1, 0));

    DetectorGroup ch{"cH", {0}}, cv{"cV", {1}}, th{"tH", {2}}, tv{"tV", {3}};
    RateTable table = coincidence_table(
        inputs, {{ch, th}, {ch, tv}, {cv, th}, {cv, tv}});

    REQUIRE(table.row_labels == std::vector<std::string>{"HH", "VH"});
    REQUIRE(table.col_labels ==
            std::vector<std::string>{"cH:tH", "cH:tV", "cV:tH", "cV:tV"});
    CHECK(table.at(0, 0) == doctest::Approx(1.0 / 9.0).epsilon(1e-13));
    CHECK(table.at(0, 3) == doctest::Approx(0.0));
    CHECK(table.at(1, 3) == doctest::Approx(1.0 / 9.0).epsilon(1e-13));
    CHECK(table.at(1, 2) == doctest::Approx(0.0));
}

TEST_CASE("postselection keeps the coincidence block") {
    PureState out = ideal_output(0, 0, 1, 0);  // |V>c |H>t
    auto result = postselect_coincidence(out, {0, 1}, {2, 3});
    CHECK(result.probability == doctest::Approx(1.0 / 9.0).epsilon(1e-13));
    REQUIRE(result.state.has_value());
    // target flipped: the kept state is |V>c |V>t
    CHECK(std::abs(result.state->amplitude({0, 1, 0, 1, 0, 0})) ==
          doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("postselected gate acts as a CNOT on random inputs") {
    std::mt19937 rng(9001);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CircuitLayout layout = build_cnot({}).layout;

    for (int trial = 0; trial < 30; ++trial) {
        Complex a{gauss(rng), gauss(rng)}, b{gauss(rng), gauss(rng)};
        Complex c{gauss(rng), gauss(rng)}, d{gauss(rng), gauss(rng)};
        PureState out = ideal_output(a, b, c, d);
        auto result = postselect_coincidence(out, {0, 1}, {2, 3});
        CHECK(std::abs(result.probability - 1.0 / 9.0) < 1e-12);
        REQUIRE(result.state.has_value());

        // the target coefficients swap on the V control branch
        PureState expected = logical_input_state(a, b, d, c, layout);
        double fidelity = std::norm(inner_product(expected, *result.state));
        CHECK(fidelity == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("empty postselection is data, not an error") {
    auto result = postselect_coincidence(vacuum_state(6), {0, 1}, {2, 3});
    CHECK(result.probability == 0.0);
    CHECK_FALSE(result.state.has_value());

    CHECK_THROWS_AS(postselect_coincidence(vacuum_state(6), {0, 1}, {1, 2}),
                    std::invalid_argument);
}
