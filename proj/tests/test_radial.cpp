#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dkp/radial.hpp"

using namespace dkp;

TEST_CASE("kappa2_of_energy matches its definition") {
    PhysicalParams p;
    const double E = 1.7;
    const double expected =
        E * E - p.k * p.k - p.M * p.M + 2.0 * E * static_cast<double>(p.m) * p.omega;
    CHECK(kappa2_of_energy(p, E) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("component elimination and F->R substitution agree with the printed operators") {
    PhysicalParams p;
    const EquivalenceReport rep = operator_equivalence_report(p, 1.3, 20, 42);
    CHECK(rep.trials == 20);
    CHECK(rep.pass);
    CHECK(rep.max_dev_elimination < 1e-8);
    CHECK(rep.max_dev_substitution < 1e-8);
}

TEST_CASE("equivalence holds over randomized parameters, including varpi > 0") {
    const EquivalenceReport rep = operator_equivalence_report_random(60, 271828);
    CHECK(rep.trials == 60);
    CHECK(rep.pass);
    CHECK(rep.max_dev_elimination < 1e-8);
    CHECK(rep.max_dev_substitution < 1e-8);
}

TEST_CASE("determinism: same seed, same report") {
    const auto a = operator_equivalence_report_random(10, 5);
    const auto b = operator_equivalence_report_random(10, 5);
    CHECK(a.max_dev_elimination == b.max_dev_elimination);
    CHECK(a.max_dev_substitution == b.max_dev_substitution);
}

TEST_CASE("the arbitrary operator is the varpi = 0 limit of the oscillator one") {
    PhysicalParams p;
    p.varpi = 0.0;
    const double E = 0.9;
    const RadialOperator osc = radial_operator(p, E, OperatorVariant::Eq16Osc);
    const RadialOperator arb = radial_operator(p, E, OperatorVariant::Eq24Arbitrary);
    CHECK(osc.c_r2 == doctest::Approx(arb.c_r2).epsilon(1e-15));
    CHECK(osc.c_r == doctest::Approx(arb.c_r).epsilon(1e-15));
    CHECK(osc.c_const == doctest::Approx(arb.c_const).epsilon(1e-15));
    CHECK(osc.c_inv_r == doctest::Approx(arb.c_inv_r).epsilon(1e-15));
    CHECK(osc.c_inv_r2 == doctest::Approx(arb.c_inv_r2).epsilon(1e-15));
    CHECK(osc.c_inv_u == doctest::Approx(arb.c_inv_u).epsilon(1e-15));
    CHECK(osc.c_inv_u2 == doctest::Approx(arb.c_inv_u2).epsilon(1e-15));
}

TEST_CASE("the small-omega-alpha operator only drops the rotational constant") {
    PhysicalParams p;
    const double E = 0.9;
    const RadialOperator arb = radial_operator(p, E, OperatorVariant::Eq24Arbitrary);
    const RadialOperator small = radial_operator(p, E, OperatorVariant::Eq34Small);
    const double mw = static_cast<double>(p.m) * p.omega;
    CHECK(arb.c_const - small.c_const == doctest::Approx(mw * mw).epsilon(1e-12));
    CHECK(arb.c_r2 == small.c_r2);
    CHECK(arb.c_r == small.c_r);
    CHECK(arb.c_inv_r2 == small.c_inv_r2);
    CHECK(arb.c_inv_u2 == small.c_inv_u2);
}

TEST_CASE("R-form operators have no first-derivative term") {
    PhysicalParams p;
    for (auto v : {OperatorVariant::Eq16Osc, OperatorVariant::Eq24Arbitrary,
                   OperatorVariant::Eq34Small}) {
        const RadialOperator op = radial_operator(p, 1.0, v);
        CHECK(op.first_deriv_coeff(0.7) == 0.0);
    }
    const RadialOperator f = radial_operator(p, 1.0, OperatorVariant::Eq14OnF);
    CHECK(f.first_deriv_coeff(0.7) != 0.0);
}

TEST_CASE("exact solution: massless zero-angular-momentum gaussian") {
    // F = exp(-q r^2 / 2) solves the F-form equation exactly at M = 0, m = 0
    // with kappa^2 = q, i.e. E = sqrt(q + k^2).
    for (double q : {0.5, 1.0, 2.0})
        for (double k : {0.0, 1.0}) {
            PhysicalParams p;
            p.M = 0.0;
            p.q = q;
            p.m = 0;
            p.k = k;
            const double E = std::sqrt(q + k * k);
            const RadialOperator op = radial_operator(p, E, OperatorVariant::Eq14OnF);
            double worst = 0.0;
            for (double r : uniform_grid(0.05, 5.0, 300)) {
                const double F = std::exp(-0.5 * q * r * r);
                const double Fp = -q * r * F;
                const double Fpp = (q * q * r * r - q) * F;
                worst = std::max(worst, std::abs(op.apply(r, F, Fp, Fpp)));
            }
            CAPTURE(q);
            CAPTURE(k);
            CHECK(worst < 1e-10);
        }
}

TEST_CASE("R-form operators need M > 0") {
    PhysicalParams p;
    p.M = 0.0;
    CHECK_NOTHROW(radial_operator(p, 1.0, OperatorVariant::Eq14OnF));
    for (auto v : {OperatorVariant::Eq16Osc, OperatorVariant::Eq24Arbitrary,
                   OperatorVariant::Eq34Small}) {
        try {
            radial_operator(p, 1.0, v);
            FAIL("expected Error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::MassZeroUnsupported);
        }
    }
}

TEST_CASE("varpi > 0 only makes sense for the oscillator operator") {
    PhysicalParams p;
    p.varpi = 0.3;
    CHECK_NOTHROW(radial_operator(p, 1.0, OperatorVariant::Eq16Osc));
    CHECK_THROWS_AS(radial_operator(p, 1.0, OperatorVariant::Eq24Arbitrary),
                    std::invalid_argument);
    CHECK_THROWS_AS(radial_operator(p, 1.0, OperatorVariant::Eq34Small),
                    std::invalid_argument);
}

TEST_CASE("transform_15 round-trips with analytic derivatives") {
    PhysicalParams p;
    const SmoothFn R = gaussian_poly(0.8, 1.2, {0.3, -1.0, 0.5, 0.1});
    const SmoothFn F = transform_15_to_F(R, p);
    const SmoothFn back = transform_15_to_R(F, p);
    for (double r : uniform_grid(0.1, 4.0, 97)) {
        CAPTURE(r);
        CHECK(std::abs(back.f(r) - R.f(r)) < 1e-14);
        CHECK(std::abs(back.df(r) - R.df(r)) < 1e-12);
        CHECK(std::abs(back.d2f(r) - R.d2f(r)) < 1e-11);
    }
}

TEST_CASE("sampled transform agrees with the smooth one") {
    PhysicalParams p;
    const SmoothFn R = gaussian_poly(0.5, 1.0, {1.0, 0.2});
    const auto grid = uniform_grid(0.2, 3.0, 41);
    SampledFunction rs;
    rs.kind = SampleKind::R;
    rs.grid = grid;
    for (double r : grid) rs.values.push_back(R.f(r));
    const SampledFunction fs = transform_15_to_F(rs, p);
    const SmoothFn fsm = transform_15_to_F(R, p);
    REQUIRE(fs.values.size() == grid.size());
    CHECK(fs.kind == SampleKind::F);
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(fs.values[i] == doctest::Approx(fsm.f(grid[i])).epsilon(1e-14));
}

TEST_CASE("component elimination produces all five components and a residual") {
    PhysicalParams p;
    const SmoothFn phi1 = gaussian_poly(1.0, 1.0, {1.0});
    const auto grid = uniform_grid(0.2, 3.0, 31);
    const SpinorSample s = eliminate_components(phi1, p, 1.3, grid);
    CHECK(s.phi1.values.size() == grid.size());
    CHECK(s.phi2.values.size() == grid.size());
    CHECK(s.phi3_im.values.size() == grid.size());
    CHECK(s.phi4.values.size() == grid.size());
    CHECK(s.phi5.values.size() == grid.size());
    CHECK(s.residual.values.size() == grid.size());
    CHECK(s.E == 1.3);
    // phi5 = -k phi1 / (M + qr)
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double u = p.M + p.q * grid[i];
        CHECK(s.phi5.values[i] ==
              doctest::Approx(-p.k * s.phi1.values[i] / u).epsilon(1e-13));
    }
}

TEST_CASE("elimination refuses a potential zero-crossing on the grid") {
    PhysicalParams p;
    p.q = -1.0;  // M + qr crosses zero at r = 1
    const SmoothFn phi1 = gaussian_poly(1.0, 0.5, {1.0});
    try {
        eliminate_components(phi1, p, 1.0, uniform_grid(0.5, 1.5, 11));
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PotentialZeroCrossing);
    }
}
