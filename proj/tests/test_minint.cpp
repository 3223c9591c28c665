#include <doctest.h>

#include "bct/minint.hpp"

using bct::Poly;
using bct::PolyMatrix;
using bct::SearchString;

namespace {

Poly X() { return Poly::x(); }

// 2x3 and 1x3 pair used throughout as the worked example.
PolyMatrix example_P() { return PolyMatrix::of({{X(), X(), 1}, {X() + 1, X(), 0}}); }
PolyMatrix example_C() { return PolyMatrix::of({{X() * X() - X(), X() - 1, -1}}); }

}  // namespace

TEST_CASE("string order and generation for three symbols") {
    std::vector<SearchString> expect = {
        {}, {1}, {1, 2}, {1, 2, 3}, {1, 3}, {2}, {2, 3}, {3}};
    CHECK(bct::sorted_strings(3) == expect);

    std::vector<SearchString> term = {{1, 2, 3}, {1, 3}, {2, 3}, {3}};
    CHECK(bct::terminal_strings(3) == term);

    CHECK(bct::string_less({1}, {1, 2}));
    CHECK(bct::string_less({1, 2, 3}, {1, 3}));
    CHECK(bct::string_less({}, {3}));
    CHECK(!bct::string_less({2}, {1, 3}));
}

TEST_CASE("string navigation operators") {
    CHECK(bct::next_terminal_above({1}, 1, 3) == SearchString{1, 2, 3});
    CHECK(bct::next_nonextension({1, 2}, 3) == SearchString{1, 3});
    CHECK(bct::first_new_prefix({1}, {1, 3}) == SearchString{1, 3});
    CHECK(bct::is_terminal({1, 3}, 3));
    CHECK(!bct::is_terminal({1, 2}, 3));
    CHECK(bct::prefixes({1, 3}).size() == 3);
    CHECK(!bct::next_nonextension({3}, 3).has_value());
    CHECK(!bct::first_new_prefix({1, 2}, {1}).has_value());
}

TEST_CASE("nullify on the worked 2x3 example") {
    auto r = bct::nullify(example_C(), example_P(), 0);
    REQUIRE(!r.fail);
    REQUIRE(!r.skip);
    CHECK(r.C_tilde.col(0).is_zero());
    // transformed C stays inside the parametrized family
    CHECK(r.C_tilde == example_C() + r.V1_tilde * (r.U * example_P()).row_range(0, 1));
    // published transform for this instance
    CHECK(bct::is_unimodular(r.U));

    // column 1 fails: gcd of P's column is x, C's entry is x - 1
    auto r2 = bct::nullify(example_C(), example_P(), 1);
    CHECK(r2.fail);

    // zero P column with nonzero C column: also a failure
    auto pz = PolyMatrix::of({{Poly(0)}, {Poly(0)}});
    auto cz = PolyMatrix::of({{X()}});
    CHECK(bct::nullify(cz, pz, 0).fail);

    // zero C column: skip
    CHECK(bct::nullify(PolyMatrix::of({{Poly(0)}}), pz, 0).skip);
}

TEST_CASE("compute_v finds the unique nullifiable column") {
    auto res = bct::compute_v(example_C(), example_P());
    CHECK(res.zero_cols == std::vector<int>{0});
    auto out = example_C() + res.V * example_P();
    CHECK(out.col(0).is_zero());
    CHECK(!out.col(1).is_zero());
    CHECK(!out.col(2).is_zero());
}

TEST_CASE("oracle agrees on the worked example") {
    auto o = bct::oracle_max_nullifiable(example_C(), example_P());
    CHECK(o.count == 1);
    CHECK(o.witness == std::vector<int>{0});
}

TEST_CASE("compute_v handles degenerate inputs") {
    // C already zero: every column is irrelevant, V = 0 works
    auto c = PolyMatrix::zero(1, 2);
    auto p = PolyMatrix::of({{X(), 1}});
    auto r = bct::compute_v(c, p);
    CHECK(r.zero_cols == std::vector<int>{0, 1});

    // P zero: no column of a nonzero C can be removed
    auto r2 = bct::compute_v(PolyMatrix::of({{X(), 1}}), PolyMatrix::zero(1, 2));
    CHECK(r2.zero_cols.empty());
}

TEST_CASE("end-to-end minimal interaction on an embedded plant") {
    // Plant: w = 0 together with rows turning the worked (C, P) pair into a
    // canonical-controller computation; exactly one control variable ends up
    // disconnected.
    bct::ControlProblem prob;
    prob.w_vars = {"w"};
    prob.c_vars = {"c1", "c2", "c3"};
    prob.R = PolyMatrix::of({{1}, {0}, {0}});
    prob.M = PolyMatrix::vstack(example_C(), example_P());
    prob.S = PolyMatrix::of({{1}});
    auto out = bct::minimize_interaction(prob);
    REQUIRE(out.status == bct::SynthStatus::ok);
    CHECK(out.result->certificate.ok());
    // the disconnected set is exactly what the oracle says is attainable
    auto cm = bct::minimal_rep(*bct::bootstrap_regular_controller(prob));
    auto pc = bct::minimal_rep(bct::control_manifest(prob));
    auto oracle = bct::oracle_max_nullifiable(cm.rep, pc.rep);
    CHECK(static_cast<int>(out.result->irrelevant.size()) == oracle.count);
}
