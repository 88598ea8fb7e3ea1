#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "dkp/spectrum.hpp"

using namespace dkp;

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_CASE("energy pair satisfies the Vieta identities") {
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 1000; ++trial) {
        PhysicalParams p;
        p.M = 0.2 + 2.0 * uniform01(rng);
        p.k = 2.0 * uniform01(rng);
        p.omega = 0.05 * uniform01(rng);
        p.m = static_cast<int>(rng() % 7) - 3;
        const double kappa2 = -2.0 + 10.0 * uniform01(rng);
        const double mw = static_cast<double>(p.m) * p.omega;
        const double disc = mw * mw + kappa2 + p.k * p.k + p.M * p.M;
        CAPTURE(trial);
        if (disc < 0.0) {
            try {
                energy_pair(kappa2, p);
                FAIL("expected ComplexEnergy");
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::ComplexEnergy);
            }
            continue;
        }
        const EnergyPair e = energy_pair(kappa2, p);
        const double scale = std::max({1.0, std::abs(e.e_plus), std::abs(e.e_minus)});
        CHECK(std::abs(e.e_plus + e.e_minus + 2.0 * mw) < 1e-12 * scale);
        CHECK(std::abs(e.e_plus * e.e_minus + (kappa2 + p.k * p.k + p.M * p.M)) <
              1e-12 * scale * scale);
        CHECK(e.e_plus >= e.e_minus);
        CHECK(e.kappa2 == kappa2);
    }
}

TEST_CASE("both roots solve the quadratic kappa2 = E^2 - k^2 - M^2 + 2 E m omega") {
    PhysicalParams p;
    const EnergyPair e = energy_pair(8.0, p);
    for (double E : {e.e_plus, e.e_minus})
        CHECK(kappa2_of_energy(p, E) == doctest::Approx(8.0).epsilon(1e-13));
}

TEST_CASE("table 1 matches the published energies") {
    const auto rows = reproduce_table(1);
    REQUIRE(rows.size() == 10);
    int typos = 0;
    for (const auto& r : rows) {
        CAPTURE(r.omega_alpha);
        REQUIRE(r.printed_e_plus.has_value());
        const double mw = 0.01;  // m omega at the canonical parameters
        if (r.typo_flag) {
            ++typos;
            // the printed symmetric value matches |e_minus|; e_plus follows
            // after shifting it down by 2 m omega
            CHECK(std::abs(r.e_minus + *r.printed_e_plus) < 2e-3);
            CHECK(std::abs(r.e_plus - (*r.printed_e_plus - 2.0 * mw)) < 2e-3);
        } else {
            CHECK(std::abs(r.e_plus - *r.printed_e_plus) < 2e-3);
            CHECK(std::abs(r.e_minus - *r.printed_e_minus) < 2e-3);
        }
    }
    CHECK(typos == 2);  // omega alpha = 0.007 and 0.01
    CHECK(rows[6].typo_flag);
    CHECK(rows[9].typo_flag);
}

TEST_CASE("table 2 matches the published energies") {
    const auto rows = reproduce_table(2);
    REQUIRE(rows.size() == 10);
    int typos = 0;
    for (const auto& r : rows) {
        CAPTURE(r.omega_alpha);
        if (r.typo_flag) {
            ++typos;
            CHECK(std::abs(r.e_plus - *r.printed_e_plus) < 2e-3);
            CHECK(std::abs(r.e_minus + (*r.printed_e_plus + 2.0 * 0.01)) < 2e-3);
        } else {
            CHECK(std::abs(r.e_plus - *r.printed_e_plus) < 2e-3);
            CHECK(std::abs(r.e_minus - *r.printed_e_minus) < 2e-3);
        }
    }
    CHECK(typos == 1);  // omega alpha = 0.009
    CHECK(rows[8].typo_flag);
}

TEST_CASE("table 3 matches the published node locations and energies") {
    const auto rows = reproduce_table(3);
    REQUIRE(rows.size() == 10);
    for (const auto& r : rows) {
        CAPTURE(r.omega_alpha);
        REQUIRE(r.alpha11.has_value());
        REQUIRE(r.printed_alpha11.has_value());
        CHECK(std::abs(*r.alpha11 - *r.printed_alpha11) < 2e-3);
        CHECK(std::abs(r.e_plus - *r.printed_e_plus) < 2e-3);
        CHECK(std::abs(r.e_minus - *r.printed_e_minus) < 2e-3);
        CHECK(!r.typo_flag);
    }
    CHECK(*rows[0].alpha11 == doctest::Approx(120.0 / 11.0).epsilon(1e-10));
    CHECK(*rows[4].alpha11 == doctest::Approx(8.0 / 3.0).epsilon(1e-10));
    CHECK(*rows[9].alpha11 == doctest::Approx(1.5).epsilon(1e-10));
}

TEST_CASE("reproduce_table rejects unknown indices") {
    CHECK_THROWS_AS(reproduce_table(0), std::invalid_argument);
    CHECK_THROWS_AS(reproduce_table(4), std::invalid_argument);
}

TEST_CASE("energy magnitudes decrease with alpha (node-less sweep)") {
    PhysicalParams p;
    const auto rows = sweep_energy(p, SweepVariable::Alpha, uniform_grid(0.1, 1.0, 20),
                                   {0.01}, SweepState::N0);
    REQUIRE(rows.size() == 20);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].error.empty());
        CHECK(std::abs(rows[i].e_plus) < std::abs(rows[i - 1].e_plus));
        CHECK(std::abs(rows[i].e_minus) < std::abs(rows[i - 1].e_minus));
    }
}

TEST_CASE("one-node energies decrease with omega alpha") {
    PhysicalParams p;
    const auto rows = sweep_energy(p, SweepVariable::OmegaAlpha,
                                   uniform_grid(0.001, 0.01, 10), {0.01}, SweepState::N1);
    REQUIRE(rows.size() == 10);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].error.empty());
        CHECK(std::abs(rows[i].e_plus) < std::abs(rows[i - 1].e_plus));
        CHECK(std::abs(rows[i].e_minus) < std::abs(rows[i - 1].e_minus));
    }
}

TEST_CASE("failed sweep points are kept with their error code") {
    PhysicalParams p;
    // alpha > 1 is invalid; the sweep must report, not drop or throw
    const auto rows = sweep_energy(p, SweepVariable::Alpha, uniform_grid(0.5, 2.0, 4),
                                   {0.01}, SweepState::N0);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].error.empty());
    CHECK(rows[3].error == "ALPHA_OUT_OF_RANGE");
}

TEST_CASE("node-less wavefunction has no interior nodes") {
    PhysicalParams p;
    const auto sel = BranchSelection::from_id("m.p.32").value();
    const AnsatzSolution sol = solve_nodeless(p, Regime::Small, sel);
    const auto grid = default_grid(sol, p);
    const SampledFunction wf = eval_wavefunction(sol, p, grid, Normalization::Raw);
    CHECK(count_nodes(wf) == 0);
    for (double v : wf.values) CHECK(v > 0.0);
}

TEST_CASE("one-node wavefunction changes sign exactly once, at alpha11") {
    PhysicalParams p;
    const auto sel = BranchSelection::from_id("m.p.32").value();
    const AnsatzSolution sol = solve_onenode(p, Regime::Small, sel);
    REQUIRE(sol.alpha11.has_value());
    const auto grid = default_grid(sol, p);
    REQUIRE(grid.front() < *sol.alpha11);
    REQUIRE(grid.back() > *sol.alpha11);
    const SampledFunction wf = eval_wavefunction(sol, p, grid, Normalization::Raw);
    CHECK(count_nodes(wf) == 1);

    SUBCASE("a grid that stops short of the node sees none") {
        const auto short_grid = uniform_grid(0.01, 0.9 * *sol.alpha11, 200);
        const SampledFunction head =
            eval_wavefunction(sol, p, short_grid, Normalization::Raw);
        CHECK(count_nodes(head) == 0);
    }
}

TEST_CASE("MAX1 normalization caps the magnitude at one") {
    PhysicalParams p;
    const auto sel = BranchSelection::from_id("m.p.32").value();
    const AnsatzSolution sol = solve_nodeless(p, Regime::Small, sel);
    const SampledFunction wf =
        eval_wavefunction(sol, p, uniform_grid(0.1, 6.0, 301), Normalization::Max1);
    CHECK(wf.normalization == Normalization::Max1);
    double peak = 0.0;
    for (double v : wf.values) peak = std::max(peak, std::abs(v));
    CHECK(peak == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("hard-wall wavefunction vanishes on the light cylinder") {
    PhysicalParams p;
    p.omega = 0.5;
    p.alpha = 1.0;           // r0 = 2
    p.q = hard_wall_q(p.M, 2.0);
    const auto sel = BranchSelection::from_id("m.p.32").value();
    const AnsatzSolution sol = solve_nodeless(p, Regime::Arbitrary, sel);
    auto grid = uniform_grid(0.01, 1.99, 100);
    grid.push_back(2.0);  // the wall itself
    const SampledFunction wf = eval_wavefunction(sol, p, grid, Normalization::Raw);
    double peak = 0.0;
    for (double v : wf.values) peak = std::max(peak, std::abs(v));
    CHECK(std::abs(wf.values.back()) <= 1e-12 * peak);
}

TEST_CASE("wavefunction refuses a negative potential factor") {
    PhysicalParams p;
    p.q = -1.0;  // M + qr < 0 past r = 1
    p.omega = 0.0;
    const auto sel = BranchSelection::from_id("m.p.32").value();
    const AnsatzSolution sol = solve_nodeless(p, Regime::Small, sel);
    try {
        eval_wavefunction(sol, p, uniform_grid(0.5, 1.5, 11), Normalization::Raw);
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PotentialNonpositive);
    }
}

TEST_CASE("ode_residual decomposes over the diagnostic mismatches") {
    // For the canonical table-1 branch the residual of the small-regime
    // operator applied to the closed-form ansatz is exactly
    // (res1 / (2 M r) - res2 / (2 M (M + q r))) * R with res1 = 6, res2 = 16.
    PhysicalParams p;
    const auto sel = BranchSelection::from_id("m.p.32").value();
    const AnsatzSolution sol = solve_nodeless(p, Regime::Small, sel);
    const auto grid = uniform_grid(0.2, 5.0, 200);
    ResidualSummary summary;
    const SampledFunction res =
        ode_residual(sol, p, OperatorVariant::Eq34Small, grid, &summary);
    const SampledFunction wf = eval_wavefunction(sol, p, grid, Normalization::Raw);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid[i];
        const double expected =
            (6.0 / (2.0 * p.M * r) - 16.0 / (2.0 * p.M * (p.M + p.q * r))) * wf.values[i];
        CAPTURE(r);
        CHECK(std::abs(res.values[i] - expected) < 1e-10);
    }
    CHECK(summary.max_abs > 0.0);
    CHECK(summary.rms <= summary.max_abs);
}

TEST_CASE("count_nodes ignores endpoints and counts strict sign changes") {
    SampledFunction f;
    f.grid = {0, 1, 2, 3, 4, 5};
    f.values = {-1.0, 1.0, 2.0, -1.0, 3.0, -5.0};  // endpoint signs must not count
    CHECK(count_nodes(f) == 2);
    f.values = {0.0, 1.0, 0.0, -1.0, 1.0, 0.0};  // zeros between sign changes
    CHECK(count_nodes(f) == 2);
    f.values = {1.0, 2.0, 3.0, 2.0, 1.0, 0.5};
    CHECK(count_nodes(f) == 0);
}

TEST_CASE("default_grid adapts to the regime") {
    PhysicalParams p;
    const auto sel = BranchSelection::from_id("m.p.32").value();

    SUBCASE("decaying solutions get a gaussian-width window") {
        const AnsatzSolution sol = solve_nodeless(p, Regime::Small, sel);
        const auto g = default_grid(sol, p);
        REQUIRE(g.size() == 2000);
        CHECK(g.front() == doctest::Approx(1e-3));
        CHECK(g.back() == doctest::Approx(8.0 / std::sqrt(0.5)));
    }

    SUBCASE("hard-wall solutions stay inside (0, r0)") {
        p.omega = 0.5;
        p.alpha = 1.0;
        p.q = hard_wall_q(p.M, 2.0);
        const AnsatzSolution sol = solve_nodeless(p, Regime::Arbitrary, sel);
        const auto g = default_grid(sol, p);
        CHECK(g.front() > 0.0);
        CHECK(g.back() < 2.0);
    }
}
