#include <doctest.h>

#include <random>

#include "bct/polymat.hpp"

using bct::Poly;
using bct::PolyMatrix;

namespace {

Poly X() { return Poly::x(); }

Poly rand_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg), dc(-3, 3);
    int d = dd(rng);
    std::vector<bct::Rational> cs;
    for (int i = 0; i <= d; ++i) cs.emplace_back(dc(rng));
    return Poly(std::move(cs));
}

PolyMatrix rand_matrix(std::mt19937& rng, int rows, int cols, int max_deg) {
    PolyMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rand_poly(rng, max_deg);
    return m;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
    auto a = PolyMatrix::of({{X(), 1}, {0, X() - 1}});
    auto i = PolyMatrix::identity(2);
    CHECK(a * i == a);
    CHECK(i * a == a);
    CHECK(a + (-a) == PolyMatrix::zero(2, 2));
    CHECK(a.transpose().transpose() == a);
    CHECK(PolyMatrix::hstack(a, i).cols() == 4);
    CHECK(PolyMatrix::vstack(a, i).rows() == 4);
    // stacking with a zero-row matrix is a no-op
    CHECK(PolyMatrix::vstack(PolyMatrix::zero(0, 2), a) == a);
}

TEST_CASE("rank over the rational function field") {
    CHECK(bct::rank(PolyMatrix::of({{X(), X(), 1}, {X() + 1, X(), 0}})) == 2);
    CHECK(bct::rank(PolyMatrix::of({{X()}, {X() * X()}})) == 1);
    CHECK(bct::rank(PolyMatrix::zero(2, 3)) == 0);
    CHECK(bct::rank(PolyMatrix::identity(3)) == 3);
}

TEST_CASE("hermite form invariants") {
    auto m = PolyMatrix::of({{X() * X() - X(), X() - 1}, {X() - 1, 1}});
    auto h = bct::hermite_form(m);
    CHECK(h.U * m == h.H);
    CHECK(h.U * h.Uinv == PolyMatrix::identity(2));
    CHECK(bct::is_unimodular(h.U));
    // pivots are monic and lie strictly to the right as rows descend
    for (size_t k = 0; k + 1 < h.pivot_cols.size(); ++k)
        CHECK(h.pivot_cols[k] < h.pivot_cols[k + 1]);
    for (size_t k = 0; k < h.pivot_cols.size(); ++k)
        CHECK(h.H.at(static_cast<int>(k), h.pivot_cols[k]).lead() == 1);
}

TEST_CASE("unimodularity detection") {
    CHECK(bct::is_unimodular(PolyMatrix::of({{-1, 1}, {-(X() + 1), X()}})));
    CHECK(!bct::is_unimodular(PolyMatrix::of({{X(), 0}, {0, 1}})));
    CHECK(!bct::is_unimodular(PolyMatrix::zero(2, 3)));
    CHECK(bct::is_unimodular(PolyMatrix::identity(1)));
}

TEST_CASE("smith form on a known matrix") {
    auto m = PolyMatrix::of({{X(), 0}, {0, X() * X()}});
    auto s = bct::smith_form(m);
    CHECK(s.U * s.D * s.V == m);
    CHECK(s.Uinv * m * s.Vinv == s.D);
    auto d = s.diagonal();
    REQUIRE(d.size() == 2);
    CHECK(d[0] == X());
    CHECK(d[1] == X() * X());
}

TEST_CASE("smith divisibility chain with mixing") {
    auto m = PolyMatrix::of({{X(), X() - 1}, {0, X() * (X() - 1)}});
    auto s = bct::smith_form(m);
    CHECK(s.U * s.D * s.V == m);
    auto d = s.diagonal();
    CHECK(d[0].is_one());  // gcd of the entries is 1
    for (size_t k = 0; k + 1 < d.size(); ++k)
        if (!d[k + 1].is_zero()) CHECK(d[k + 1].divisible_by(d[k]));
}

TEST_CASE("column compression") {
    auto r = PolyMatrix::of({{X(), X(), 1}, {X() + 1, X(), 0}});
    auto c = bct::column_compress(r);
    CHECK(bct::is_unimodular(c.W));
    auto rw = r * c.W;
    CHECK(rw.row_range(0, 2).select_cols({0, 1}) == c.D);
    CHECK(rw.col(2).is_zero());
    CHECK(bct::rank(c.D) == 2);
    CHECK_THROWS_AS(bct::column_compress(PolyMatrix::of({{X(), X()}, {X(), X()}})),
                    std::invalid_argument);
}

TEST_CASE("left division solves module membership") {
    auto a = PolyMatrix::of({{X() * X() - X()}});
    auto b = PolyMatrix::of({{X() * X() * X() - X() * X()}});
    auto x = bct::solve_left_division(a, b);
    REQUIRE(x.has_value());
    CHECK(*x * a == b);
    CHECK(x->at(0, 0) == X());

    CHECK(!bct::solve_left_division(a, PolyMatrix::of({{X() - 1}})).has_value());

    // rows of b in the span of two rows of a
    auto a2 = PolyMatrix::of({{X(), 0}, {0, 1}});
    auto b2 = PolyMatrix::of({{X() * X(), X() + 1}});
    auto x2 = bct::solve_left_division(a2, b2);
    REQUIRE(x2.has_value());
    CHECK(*x2 * a2 == b2);
}

TEST_CASE("unimodular completion") {
    auto u1 = PolyMatrix::of({{X(), X() + 1}});
    auto u2 = bct::unimodular_completion(u1);
    REQUIRE(u2.has_value());
    CHECK(bct::is_unimodular(PolyMatrix::vstack(u1, *u2)));

    // [x 0] is not left prime: no completion
    CHECK(!bct::unimodular_completion(PolyMatrix::of({{X(), 0}})).has_value());
}

TEST_CASE("column gcd with witness") {
    auto g = bct::col_gcd_bezout({X(), X() + 1});
    CHECK(g.pi.is_one());
    CHECK(g.v[0] * X() + g.v[1] * (X() + 1) == g.pi);

    auto g2 = bct::col_gcd_bezout({X(), X()});
    CHECK(g2.pi == X());

    auto g3 = bct::col_gcd_bezout({Poly(), Poly()});
    CHECK(g3.pi.is_zero());
}

TEST_CASE("randomized normal-form properties") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int t = 0; t < 120; ++t) {
        auto m = rand_matrix(rng, dim(rng), dim(rng), 2);
        auto h = bct::hermite_form(m);
        CHECK(h.U * m == h.H);
        CHECK(h.U * h.Uinv == PolyMatrix::identity(m.rows()));
        CHECK(h.rank() == bct::rank(m));

        auto s = bct::smith_form(m);
        CHECK(s.U * s.D * s.V == m);
        CHECK(s.Uinv * m * s.Vinv == s.D);
        auto d = s.diagonal();
        for (size_t k = 0; k + 1 < d.size(); ++k)
            if (!d[k + 1].is_zero()) CHECK(d[k + 1].divisible_by(d[k]));
    }
}
