// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "lopsim/analysis.hpp"

using namespace lopsim;

namespace {

void check_matrix(const RateTable& table, const double want[4][4],
                  double tol = 1e-12) {
    REQUIRE(table.row_labels.size() == 4);
    REQUIRE(table.col_labels.size() == 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(std::abs(table.at(r, c) - want[r][c]) < tol);
}

// closed-form error at ideal ratios: (3 - sqrt(xi) - 2 xi) / (4 - 2 xi)
double mismatch_error(double xi) {
    return (3.0 - std::sqrt(xi) - 2.0 * xi) / (4.0 - 2.0 * xi);
}

}  // namespace

TEST_CASE("logical table at ideal parameters") {
    const double k = 1.0 / 9.0;
    const double want[4][4] = {
        {k, 0, 0, 0},
        {0, k, 0, 0},
        {0, 0, 0, k},
        {0, 0, k, 0},
    };
    RateTable table = logical_rate_table({});
    check_matrix(table, want);
    CHECK(table.row_labels ==
          std::vector<std::string>{"HH", "HV", "VH", "VV"});
    CHECK(table.col_labels ==
          std::vector<std::string>{"cH:tH", "cH:tV", "cV:tH", "cV:tV"});
}

TEST_CASE("logical table with mode mismatch") {
    const double k = 1.0 / 9.0;
    for (double xi : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double e = 2.0 / 9.0 * (1.0 - xi);
        const double want[4][4] = {
            {k, 0, 0, 0},
            {0, k, 0, 0},
            {0, 0, e, k},
            {0, 0, k, e},
        };
        check_matrix(logical_rate_table({1.0 / 3.0, 0.5, xi}), want);
    }
}

TEST_CASE("bell table at ideal parameters") {
    const double k = 1.0 / 9.0;
    const double want[4][4] = {
        {k, 0, 0, 0},
        {0, k, 0, 0},
        {0, 0, k, 0},
        {0, 0, 0, k},
    };
    RateTable table = bell_rate_table({});
    check_matrix(table, want);
    CHECK(table.row_labels ==
          std::vector<std::string>{"psi+", "psi-", "phi+", "phi-"});
    CHECK(table.col_labels ==
          std::vector<std::string>{"cS1:tH", "cS2:tH", "cS1:tV", "cS2:tV"});
}

TEST_CASE("bell table with mode mismatch") {
    for (double xi : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double p = (1.0 + std::sqrt(xi)) / 18.0;
        const double m = (1.0 - std::sqrt(xi)) / 18.0;
        const double e = (1.0 - xi) / 18.0;
        const double want[4][4] = {
            {p, m, e, e},
            {m, p, e, e},
            {e, e, p, m},
            {e, e, m, p},
        };
        check_matrix(bell_rate_table({1.0 / 3.0, 0.5, xi}), want);
    }
}

TEST_CASE("bell error probability") {
    RateTable ideal = bell_rate_table({});
    for (BellState kind : kBellStates)
        CHECK(bell_error_probability(ideal, kind) < 1e-12);

    const double xi = 0.96;
    RateTable table = bell_rate_table({1.0 / 3.0, 0.5, xi});
    double err = bell_error_probability(table, BellState::psi_plus);
    CHECK(err == doctest::Approx(mismatch_error(xi)).epsilon(1e-12));
    CHECK(err == doctest::Approx(0.0482).epsilon(5e-3));

    // at complete mismatch every Bell state is equally confusable
    RateTable worst = bell_rate_table({1.0 / 3.0, 0.5, 0.0});
    for (BellState kind : kBellStates)
        CHECK(bell_error_probability(worst, kind) ==
              doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("table entries stay within probability bounds") {
    for (const GateParams& params :
         {GateParams{1.0 / 3.0, 0.5, 0.3}, GateParams{0.3, 0.55, 1.0},
          GateParams{0.36, 0.47, 0.85}}) {
        for (const RateTable& table :
             {logical_rate_table(params), bell_rate_table(params)}) {
            for (const auto& row : table.values) {
                double sum = 0.0;
                for (double v : row) {
                    CHECK(v >= 0.0);
                    CHECK(v <= 1.0);
                    sum += v;
                }
                CHECK(sum <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("grid_values covers the range inclusively") {
    auto grid = grid_values({0.0, 1.0, 5});
    REQUIRE(grid.size() == 5);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 1.0);
    CHECK(grid[2] == doctest::Approx(0.5));

    CHECK(grid_values({0.3, 0.3, 1}) == std::vector<double>{0.3});
    CHECK_THROWS_AS(grid_values({0.0, 1.0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(grid_values({0.0, 1.0, 1}), std::invalid_argument);
}

TEST_CASE("beamsplitter sweep hits zero at the ideal point") {
    auto reports = sweep_beamsplitter({1.0 / 3.0, 1.0 / 3.0, 1},
                                      {0.5, 0.5, 1});
    REQUIRE(reports.size() == 1);
    for (double err : reports[0].error) CHECK(err < 1e-12);
    for (double total : reports[0].total_rate)
        CHECK(total == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("beamsplitter sweep near the quoted tolerance point") {
    auto reports = sweep_beamsplitter({1.0 / 3.0 + 0.01, 1.0 / 3.0 + 0.01, 1},
                                      {0.55, 0.55, 1});
    REQUIRE(reports.size() == 1);
    for (double err : reports[0].error) {
        CHECK(err > 0.004);
        CHECK(err < 0.010);
    }
}

TEST_CASE("beamsplitter sweep is ordered row-major") {
    auto reports = sweep_beamsplitter({0.3, 0.4, 2}, {0.45, 0.55, 3});
    REQUIRE(reports.size() == 6);
    CHECK(reports[0].eta == doctest::Approx(0.3));
    CHECK(reports[0].eta_prime == doctest::Approx(0.45));
    CHECK(reports[2].eta == doctest::Approx(0.3));
    CHECK(reports[2].eta_prime == doctest::Approx(0.55));
    CHECK(reports[3].eta == doctest::Approx(0.4));
}

TEST_CASE("mismatch sweep matches the closed forms") {
    auto reports = sweep_mismatch({0.8, 1.0, 21});
    REQUIRE(reports.size() == 21);
    CHECK(reports.back().xi == 1.0);
    for (double err : reports.back().error) CHECK(err < 1e-12);

    for (const auto& report : reports) {
        double want = mismatch_error(report.xi);
        for (double err : report.error) CHECK(std::abs(err - want) < 1e-12);
    }

    // near-perfect matching: error tracks the mismatch fraction
    auto near = sweep_mismatch({0.99, 0.99, 1});
    for (double err : near[0].error) {
        CHECK(err > 0.5 * 0.01);
        CHECK(err < 2.0 * 0.01);
    }
}
