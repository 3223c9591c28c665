#include <doctest.h>

#include "bct/control.hpp"

using bct::Behavior;
using bct::ControlProblem;
using bct::Poly;
using bct::PolyMatrix;

namespace {

Poly X() { return Poly::x(); }

// Single-tank balance e - u - d = 0 with manifest variable e and control
// variables (u, d); the specification is chosen per test.
ControlProblem tank(PolyMatrix s) {
    ControlProblem p;
    p.R = PolyMatrix::of({{1}});
    p.M = PolyMatrix::of({{-1, -1}});
    p.S = std::move(s);
    p.w_vars = {"e"};
    p.c_vars = {"u", "d"};
    return p;
}

}  // namespace

TEST_CASE("problem validation") {
    auto p = tank(PolyMatrix::zero(0, 1));
    CHECK_NOTHROW(p.validate());
    p.S = PolyMatrix::of({{1, 1}});  // wrong width
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("tank projections") {
    auto p = tank(PolyMatrix::zero(0, 1));
    // nothing is hidden: c = 0 forces e = 0
    auto n = bct::hidden_behavior(p);
    CHECK(bct::equals(n, Behavior{PolyMatrix::of({{Poly(1)}}), {"e"}}));
    // every e and every (u, d) is attainable
    CHECK(bct::equals(bct::manifest_behavior(p), Behavior::full({"e"})));
    CHECK(bct::equals(bct::control_manifest(p), Behavior::full({"u", "d"})));
}

TEST_CASE("tank canonical controller and regularity") {
    // specification: level error must be constant, d/dt e = 0
    auto p = tank(PolyMatrix::of({{X()}}));
    auto ccan = bct::canonical_controller(p);
    REQUIRE(ccan.vars == std::vector<std::string>{"u", "d"});
    // forcing e through the plant: x(u + d) = 0
    CHECK(bct::equals(ccan, Behavior{PolyMatrix::of({{X(), X()}}), {"u", "d"}}));

    CHECK(bct::is_implementable(p));
    CHECK(bct::is_regularly_implementable(p));

    Behavior ctrl{PolyMatrix::of({{0, 1}}), {"u", "d"}};  // d = 0
    CHECK(bct::is_regular(p, ctrl));
}

TEST_CASE("tank controlled behavior with d = 0") {
    // plant plus d = 0 leaves e = u free
    auto p = tank(PolyMatrix::zero(0, 1));
    Behavior ctrl{PolyMatrix::of({{0, 1}}), {"u", "d"}};
    auto k = bct::controlled_behavior(p, ctrl);
    CHECK(bct::equals(k, Behavior::full({"e"})));
    CHECK(bct::is_regular(p, ctrl));
}

TEST_CASE("non-regularly-implementable family detected") {
    // Hidden N = {0}, manifest P = ker x, controllable part of P = {0}.
    // S = {0} is implementable but S + P^ctr = {0} != P, so no regular
    // controller implements it.
    ControlProblem p;
    p.R = PolyMatrix::of({{X()}, {X() - 1}});
    p.M = PolyMatrix::of({{0}, {1}});
    p.S = PolyMatrix::of({{1}});  // S = {0}
    p.w_vars = {"w"};
    p.c_vars = {"c"};
    CHECK(bct::is_implementable(p));
    CHECK(!bct::is_regularly_implementable(p));
    CHECK(!bct::bootstrap_regular_controller(p).has_value());
}

TEST_CASE("bootstrap then certificate") {
    auto p = tank(PolyMatrix::of({{X()}}));
    auto c0 = bct::bootstrap_regular_controller(p);
    REQUIRE(c0.has_value());
    auto cert = bct::make_certificate(p, *c0);
    CHECK(cert.ok());
}

TEST_CASE("parametrized controllers stay equivalent") {
    auto p = tank(PolyMatrix::of({{X()}}));
    auto c0 = bct::bootstrap_regular_controller(p);
    REQUIRE(c0.has_value());
    auto pc = bct::minimal_rep(bct::control_manifest(p));
    auto cm = bct::minimal_rep(*c0);

    PolyMatrix v(cm.rep.rows(), pc.rep.rows());
    for (int i = 0; i < v.rows(); ++i)
        for (int j = 0; j < v.cols(); ++j) v.at(i, j) = X() + (i + j);
    auto c1 = bct::parametrize(cm, pc, v);
    auto cert = bct::make_certificate(p, c1);
    CHECK(cert.regular);
    CHECK(cert.equivalent_to_canonical);
}
