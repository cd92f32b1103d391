#include <catch2/catch_amalgamated.hpp>

#include <eulercc/linalg.hpp>

using namespace eulercc;

namespace {

RatVector v(std::initializer_list<int> xs)
{
    RatVector out;
    for (int x : xs)
        out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("rationals parse and print exactly", "[rational]")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("+2/4") == Rational(1, 2));
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
    CHECK_THROWS_AS(parse_rational("/3"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("sampler is reproducible", "[rational]")
{
    RationalSampler a(42), b(42), c(43);
    const auto xa = a.next_vector(8);
    CHECK(xa == b.next_vector(8));
    CHECK(xa != c.next_vector(8));
    RationalSampler d(7);
    for (int i = 0; i < 200; ++i) {
        const auto k = d.next_int(-3, 3);
        CHECK(k >= -3);
        CHECK(k <= 3);
    }
}

TEST_CASE("primitive rescaling", "[linalg]")
{
    RatVector x{Rational(1, 2), Rational(-3, 4), Rational(0)};
    CHECK(primitive(x) == v({2, -3, 0}));
    CHECK(primitive(v({0, 0})) == v({0, 0}));
}

TEST_CASE("inertia of symmetric forms", "[linalg]")
{
    CHECK(inertia(RatSymMatrix::identity(3)) == Inertia{3, 0, 0});
    // x*y has signature (1,1) and a zero diagonal
    RatSymMatrix xy(RatMatrix{v({0, 1}), v({1, 0})});
    CHECK(inertia(xy) == Inertia{1, 1, 0});
    RatSymMatrix degenerate(RatMatrix{v({1, 1, 0}), v({1, 1, 0}), v({0, 0, -2})});
    CHECK(inertia(degenerate) == Inertia{1, 1, 1});
    CHECK_THROWS_AS(RatSymMatrix(RatMatrix{v({1, 2}), v({3, 1})}), InputError);
}

TEST_CASE("inertia is invariant under congruence", "[linalg][property]")
{
    RationalSampler rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3;
        RatMatrix d(n, RatVector(n, Rational(0)));
        Inertia expected{0, 0, 0};
        for (std::size_t i = 0; i < n; ++i) {
            const auto s = rng.next_int(-1, 1);
            d[i][i] = s;
            (s > 0 ? expected.n_positive : s < 0 ? expected.n_negative : expected.n_zero)++;
        }
        RatMatrix p(n, RatVector(n));
        for (auto& row : p)
            for (auto& x : row)
                x = rng.next_int(-3, 3);
        if (rank(p, n) != n)
            continue;
        // p^T d p
        RatMatrix m(n, RatVector(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    m[i][j] += p[k][i] * d[k][k] * p[k][j];
        CHECK(inertia(RatSymMatrix(m)) == expected);
    }
}

TEST_CASE("affine solve and complement", "[linalg]")
{
    // x + y + z = 1, x - y = 0
    std::vector<LinearEquation> eqs{{v({1, 1, 1}), Rational(1)}, {v({1, -1, 0}), Rational(0)}};
    auto sol = solve_affine(eqs, 3);
    REQUIRE(sol);
    CHECK(sol->dim() == 1);
    for (const auto& e : eqs)
        CHECK(dot(e.a, sol->basepoint) == e.rhs);
    std::vector<LinearEquation> bad{{v({1, 1}), Rational(1)}, {v({2, 2}), Rational(3)}};
    CHECK_FALSE(solve_affine(bad, 2));

    const auto comp = orthogonal_complement({v({1, 1, 0})}, 3);
    CHECK(comp.size() == 2);
    for (const auto& c : comp)
        CHECK(dot(c, v({1, 1, 0})) == 0);
    CHECK(rank(comp, 3) == 2);
}

TEST_CASE("rational simplex method", "[linalg][lp]")
{
    // max x + y s.t. x <= 2, y <= 3, x + 2y <= 7, x, y >= 0; optimum 9/2 at (2, 5/2)
    std::vector<LinearEquation> ineq{{v({-1, 0}), Rational(-2)}, {v({0, -1}), Rational(-3)},
                                     {v({-1, -2}), Rational(-7)}, {v({1, 0}), Rational(0)},
                                     {v({0, 1}), Rational(0)}};
    auto r = lp_maximize(v({1, 1}), {}, ineq);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == Rational(9, 2));
    CHECK(r.x == RatVector{Rational(2), Rational(5, 2)});

    auto unb = lp_maximize(v({1, 0}), {}, {{v({0, 1}), Rational(0)}});
    CHECK(unb.status == LpStatus::unbounded);
    auto inf = lp_maximize(v({1}), {}, {{v({1}), Rational(1)}, {v({-1}), Rational(0)}});
    CHECK(inf.status == LpStatus::infeasible);
}

TEST_CASE("strict feasibility reports relative-interior dimension", "[linalg][lp]")
{
    // open triangle x > 0, y > 0, x + y < 1
    ConstraintSystem tri{2, {}, {{v({1, 0}), Rational(0)}, {v({0, 1}), Rational(0)},
                                 {v({-1, -1}), Rational(-1)}}, {}};
    auto r = strict_feasibility(tri);
    CHECK(r.feasible);
    CHECK(r.dim == 2);
    REQUIRE(r.witness);
    CHECK((*r.witness)[0] > 0);

    // x >= 0, x <= 0 forces a lower-dimensional set
    ConstraintSystem flat{2, {}, {{v({0, 1}), Rational(0)}}, {{v({1, 0}), Rational(0)},
                                                             {v({-1, 0}), Rational(0)}}};
    auto f = strict_feasibility(flat);
    CHECK(f.feasible);
    CHECK(f.dim == 1);
    CHECK((*f.witness)[0] == 0);

    ConstraintSystem empty{1, {}, {{v({1}), Rational(0)}, {v({-1}), Rational(0)}}, {}};
    auto e = strict_feasibility(empty);
    CHECK_FALSE(e.feasible);
    CHECK(e.dim == -1);
}
