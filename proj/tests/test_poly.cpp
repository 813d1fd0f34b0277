#include "doctest.h"

#include <random>

#include "tvar/errors.hpp"
#include "tvar/multipoly.hpp"

using namespace tvar;
using namespace tvar::poly;

namespace {

const std::vector<std::string> XYZT{"x", "y", "z", "t"};

MultiPoly fixture3() { return parse_poly("x^3 + y*(1 - y*z)^2 - t^2", XYZT); }

MultiPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 5), expo(0, 3), numer(-9, 9);
    std::uniform_int_distribution<int> denom(1, 4);
    MultiPoly p = MultiPoly::constant(XYZT, 0);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        MultiPoly term = MultiPoly::constant(XYZT, Rat(numer(rng), denom(rng)));
        for (std::size_t v = 0; v < XYZT.size(); ++v)
            term = term * MultiPoly::variable(XYZT, v).pow(expo(rng));
        p = p + term;
    }
    return p;
}

RatVec random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> numer(-5, 5);
    std::uniform_int_distribution<int> denom(1, 3);
    RatVec p;
    for (std::size_t i = 0; i < XYZT.size(); ++i) p.push_back(Rat(numer(rng), denom(rng)));
    return p;
}

} // namespace

TEST_CASE("evaluation of the cuspidal fixture") {
    MultiPoly f = fixture3();
    CHECK(f.eval_at({Rat(0), Rat(1), Rat(1), Rat(0)}) == 0);
    CHECK(f.eval_at({Rat(1), Rat(0), Rat(0), Rat(1)}) == 0);
    CHECK(f.eval_at({Rat(0), Rat(0), Rat(0), Rat(0)}) == 0);  // constant term
    CHECK(MultiPoly::constant(XYZT, Rat(7, 3)).eval_at({Rat(0), Rat(0), Rat(0), Rat(0)}) ==
          Rat(7, 3));
    CHECK_THROWS_AS(f.eval_at({Rat(0)}), std::invalid_argument);
}

TEST_CASE("jacobian point checks on the fixtures") {
    MultiPoly f = fixture3();
    SUBCASE("the singular point has a vanishing gradient") {
        auto j = jacobian_at({f}, {Rat(0), Rat(1), Rat(1), Rat(0)});
        CHECK(j.rank == 0);
        for (const auto& e : j.matrix[0]) CHECK(e == 0);
        CHECK(is_singular_point({f}, {Rat(0), Rat(1), Rat(1), Rat(0)}));
    }
    SUBCASE("a smooth point has gradient (3,1,0,-2)") {
        auto j = jacobian_at({f}, {Rat(1), Rat(0), Rat(0), Rat(1)});
        CHECK(j.rank == 1);
        CHECK(j.matrix[0] == RatVec{Rat(3), Rat(1), Rat(0), Rat(-2)});
        CHECK_FALSE(is_singular_point({f}, {Rat(1), Rat(0), Rat(0), Rat(1)}));
    }
    SUBCASE("off-variety points are rejected") {
        CHECK_THROWS_AS(jacobian_at({f}, {Rat(1), Rat(1), Rat(1), Rat(0)}),
                        PointNotOnVarietyError);
    }
    SUBCASE("a linear polynomial is smooth at its zeroes") {
        MultiPoly x = parse_poly("x", XYZT);
        auto j = jacobian_at({x}, {Rat(0), Rat(2), Rat(3), Rat(4)});
        CHECK(j.rank == 1);
        CHECK_FALSE(is_singular_point({x}, {Rat(0), Rat(2), Rat(3), Rat(4)}));
    }
}

TEST_CASE("the elliptic fixture is smooth at a sampled point") {
    // (1/z) h(x^3 z, y z) - t^2 expanded at alpha=2, beta=3, sampled at z=1
    MultiPoly f = parse_poly("x^6*z - y*(y*z - 2)*(y*z - 3) - t^2", XYZT);
    RatVec pt{Rat(1), Rat(0), Rat(1), Rat(1)};
    CHECK(f.eval_at(pt) == 0);
    CHECK_FALSE(is_singular_point({f}, pt));
}

TEST_CASE("derivation is linear and satisfies the product rule") {
    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 100; ++iter) {
        MultiPoly f = random_poly(rng), g = random_poly(rng);
        RatVec pt = random_point(rng);
        for (std::size_t v = 0; v < XYZT.size(); ++v) {
            MultiPoly sum_d = (f + g).derivative(v);
            MultiPoly d_sum = f.derivative(v) + g.derivative(v);
            CHECK((sum_d - d_sum).is_zero());
            MultiPoly prod_d = (f * g).derivative(v);
            MultiPoly leibniz = f.derivative(v) * g + f * g.derivative(v);
            CHECK((prod_d - leibniz).is_zero());
            CHECK(prod_d.eval_at(pt) == leibniz.eval_at(pt));
        }
    }
}

TEST_CASE("parser understands the grammar and rejects junk") {
    CHECK(parse_poly("x^2 - y", {"x", "y"}).eval_at({Rat(3), Rat(2)}) == 7);
    CHECK(parse_poly("(x + y)^2 - x^2 - 2*x*y - y^2", {"x", "y"})
              .is_zero());
    CHECK(parse_poly("-x + 1/2", {"x"}).eval_at({Rat(1, 2)}) == 0);
    CHECK_THROWS_AS(parse_poly("x +", {"x"}), ParseError);
    CHECK_THROWS_AS(parse_poly("w", {"x"}), ParseError);
    CHECK_THROWS_AS(parse_poly("x ^ y", {"x", "y"}), ParseError);
}
