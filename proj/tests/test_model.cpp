#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "dkp/params.hpp"

using namespace dkp;

TEST_CASE("defaults are the canonical table parameters") {
    PhysicalParams p;
    CHECK(p.M == 1.0);
    CHECK(p.q == 1.0);
    CHECK(p.varpi == 0.0);
    CHECK(p.omega == 0.01);
    CHECK(p.alpha == 0.5);
    CHECK(p.m == 1);
    CHECK(p.k == 1.0);
    CHECK(validate(p).empty());
}

TEST_CASE("derived quantities") {
    PhysicalParams p;
    CHECK(p.omega_alpha() == doctest::Approx(0.005));
    CHECK(p.r0() == doctest::Approx(200.0));
    CHECK(p.m_alpha() == doctest::Approx(2.0));
    CHECK(p.rho(100.0) == doctest::Approx(0.5));
    CHECK(p.potential(3.0) == doctest::Approx(3.0));

    SUBCASE("non-rotating limit pushes the light cylinder to infinity") {
        p.omega = 0.0;
        CHECK(std::isinf(p.r0()));
        CHECK(p.rho(1e12) == 0.0);
    }

    SUBCASE("signed slope") {
        p.q = -0.25;
        CHECK(p.potential(2.0) == doctest::Approx(-0.5));
        CHECK(validate(p).empty());  // q < 0 is a legal hard-wall setup
    }
}

TEST_CASE("validation catches out-of-range inputs") {
    PhysicalParams p;

    SUBCASE("alpha must be in (0, 1]") {
        p.alpha = 0.0;
        auto errs = validate(p);
        REQUIRE(errs.size() == 1);
        CHECK(errs[0] == ErrorCode::AlphaOutOfRange);
        p.alpha = 1.5;
        CHECK(validate(p).front() == ErrorCode::AlphaOutOfRange);
        p.alpha = 1.0;
        CHECK(validate(p).empty());
    }

    SUBCASE("frequencies must be non-negative") {
        p.varpi = -0.1;
        CHECK(validate(p).front() == ErrorCode::NegativeFrequency);
        p.varpi = 0.0;
        p.omega = -0.01;
        CHECK(validate(p).front() == ErrorCode::NegativeFrequency);
    }

    SUBCASE("radius beyond the light cylinder") {
        CHECK(validate(p, 199.0).empty());
        auto errs = validate(p, 200.0);  // rho = 1 exactly
        REQUIRE(errs.size() == 1);
        CHECK(errs[0] == ErrorCode::RhoGeOne);
    }

    SUBCASE("multiple violations are all reported") {
        p.alpha = 2.0;
        p.omega = -1.0;
        CHECK(validate(p).size() == 2);
    }
}

TEST_CASE("require_valid throws the first violated code") {
    PhysicalParams p;
    p.alpha = -1.0;
    try {
        require_valid(p);
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AlphaOutOfRange);
    }
}

TEST_CASE("derived() rejects the exterior region") {
    PhysicalParams p;
    const Derived d = derived(p, 100.0);
    CHECK(d.rho == doctest::Approx(0.5));
    CHECK(d.r0 == doctest::Approx(200.0));
    CHECK(d.m_alpha == doctest::Approx(2.0));
    CHECK_THROWS_AS(derived(p, 200.0), Error);
}

TEST_CASE("error code names are stable identifiers") {
    CHECK(std::string(error_code_name(ErrorCode::RhoGeOne)) == "RHO_GE_ONE");
    CHECK(std::string(error_code_name(ErrorCode::ComplexEnergy)) == "COMPLEX_ENERGY");
    CHECK(std::string(error_code_name(ErrorCode::Alpha11Singular)) == "ALPHA11_SINGULAR");
}

TEST_CASE("branch selections enumerate all 8 ansatz branches") {
    const auto sels = BranchSelection::all();
    std::set<std::string> ids;
    for (const auto& s : sels) ids.insert(s.id());
    CHECK(ids.size() == 8);

    // stable, documented order: (b1,b2) sign, then b3 sign, then b4 root
    CHECK(sels[0].id() == "p.p.32");
    CHECK(sels[1].id() == "p.p.m12");
    CHECK(sels[2].id() == "p.m.32");
    CHECK(sels[4].id() == "m.p.32");
    CHECK(sels[7].id() == "m.m.m12");

    SUBCASE("id round-trips") {
        for (const auto& s : sels) {
            auto back = BranchSelection::from_id(s.id());
            REQUIRE(back.has_value());
            CHECK(back->sign12 == s.sign12);
            CHECK(back->sign3 == s.sign3);
            CHECK(back->b4 == s.b4);
        }
        CHECK(!BranchSelection::from_id("x.y.z").has_value());
    }
}
