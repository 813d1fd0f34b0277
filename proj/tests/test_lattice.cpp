#include "doctest.h"

#include <random>

#include "tvar/lattice.hpp"

using namespace tvar;
using namespace tvar::lat;

namespace {

Int det_abs(const IntMatrix& m) { return iabs(m.determinant()); }

// independent oracle: gcd of all 2x2 minors of a 2x3 matrix
Int minor_gcd_2x3(const IntMatrix& p) {
    REQUIRE(p.rows() == 2);
    REQUIRE(p.cols() == 3);
    Int g = 0;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = j + 1; k < 3; ++k)
            g = gcd(g, iabs(p.at(0, j) * p.at(1, k) - p.at(0, k) * p.at(1, j)));
    return g;
}

bool divisibility_chain(const IntMatrix& s) {
    std::size_t n = std::min(s.rows(), s.cols());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (s.at(i, i) == 0) {
            if (s.at(i + 1, i + 1) != 0) return false;
            continue;
        }
        if (s.at(i + 1, i + 1) % s.at(i, i) != 0) return false;
    }
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (i != j && s.at(i, j) != 0) return false;
    return true;
}

} // namespace

TEST_CASE("rho is the gcd of absolute values") {
    CHECK(rho(2, 6) == 2);
    CHECK(rho(2, -6) == 2);
    CHECK(rho(7, 1) == 1);
    CHECK(rho(0, 5) == 5);
    CHECK_THROWS_AS(rho(0, 0), std::domain_error);
}

TEST_CASE("delta follows the gcd formula") {
    // oracle: direct evaluation of gcd(a/rho(a,c), b/rho(b,c))
    auto oracle = [](long a, long b, long c) {
        Int ra = rho(a, c), rb = rho(b, c);
        return gcd(Int(a) / ra, Int(b) / rb);
    };
    CHECK(delta(2, 3, 6) == 1);
    CHECK(delta(1, 1, 3) == 1);
    CHECK(delta(4, 6, 2) == oracle(4, 6, 2));
    CHECK(delta(4, 6, 2) == 1);  // gcd(4/2, 6/2) = gcd(2, 3)
    CHECK(delta(4, 8, 2) == 2);  // gcd(2, 4)
    CHECK_THROWS_AS(delta(0, 1, 1), std::domain_error);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(1, 60);
    for (int i = 0; i < 300; ++i) {
        long a = dist(rng), b = dist(rng), c = dist(rng);
        CHECK(delta(a, b, c) == oracle(a, b, c));
    }
}

TEST_CASE("xgcd returns a minimal Bezout pair") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-200, 200);
    for (int i = 0; i < 500; ++i) {
        Int a = dist(rng), b = dist(rng);
        Int x, y;
        Int g = xgcd(a, b, x, y);
        if (a == 0 && b == 0) {
            CHECK(g == 0);
            continue;
        }
        CHECK(g > 0);
        CHECK(a % g == 0);
        CHECK(b % g == 0);
        CHECK(a * x + b * y == g);
        if (a != 0 && b != 0) CHECK(iabs(x) <= iabs(b) / g);
    }
}

TEST_CASE("smith normal form on the worked columns") {
    SUBCASE("weight column (2,3,-6)") {
        auto r = smith_normal_form(IntMatrix::column({2, 3, -6}));
        CHECK(r.S.at(0, 0) == 1);
        CHECK(r.S.at(1, 0) == 0);
        CHECK(r.S.at(2, 0) == 0);
    }
    SUBCASE("identity") {
        auto r = smith_normal_form(IntMatrix::identity(3));
        CHECK(r.S == IntMatrix::identity(3));
    }
    SUBCASE("case-1 cokernel of (2,3,-6)") {
        auto r = smith_normal_form(IntMatrix::from_rows({{3, 0, 1}, {0, 2, 1}}));
        CHECK(r.S.at(0, 0) == 1);
        CHECK(r.S.at(1, 1) == 1);
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> dim(1, 4), entry(-20, 20);
    for (int iter = 0; iter < 250; ++iter) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        auto res = smith_normal_form(m);
        CHECK(res.U * m * res.V == res.S);
        CHECK(det_abs(res.U) == 1);
        CHECK(det_abs(res.V) == 1);
        CHECK(divisibility_chain(res.S));
    }
}

TEST_CASE("section_of produces valid sections deterministically") {
    CHECK(section_of({1, 0, 0}) == IntVec{1, 0, 0});
    CHECK(section_of({2, 3, -6}) == IntVec{-1, 1, 0});

    CHECK(is_valid_section({-1, 1, 0}, {2, 3, -6}));
    CHECK(is_valid_section({0, 0, -1}, {1, 1, -1}));
    CHECK_FALSE(is_valid_section({1, 1, 0}, {2, 3, -6}));
    CHECK_THROWS_AS(section_of({2, 4, -6}), NoSectionError);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> dist(-50, 50);
    int done = 0;
    while (done < 200) {
        IntVec f{dist(rng), dist(rng), dist(rng)};
        Int g = gcd(gcd(iabs(f[0]), iabs(f[1])), iabs(f[2]));
        if (g != 1) continue;
        ++done;
        CHECK(is_valid_section(section_of(f), f));
    }
}

TEST_CASE("column_reduce_unimodular reduces to the gcd") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> dist(-99, 99);
    for (int i = 0; i < 200; ++i) {
        IntVec f{dist(rng), dist(rng), dist(rng)};
        if (f[0] == 0 && f[1] == 0 && f[2] == 0) continue;
        IntMatrix u = column_reduce_unimodular(f);
        CHECK(det_abs(u) == 1);
        IntMatrix uf = u * IntMatrix::column(f);
        Int g = gcd(gcd(iabs(f[0]), iabs(f[1])), iabs(f[2]));
        CHECK(uf.at(0, 0) == g);
        CHECK(uf.at(1, 0) == 0);
        CHECK(uf.at(2, 0) == 0);
    }
}

TEST_CASE("cokernel matrices from the case table") {
    SUBCASE("(2,3,-6) case 1") {
        auto r = cokernel_matrix({2, 3, -6}, 1);
        CHECK(r.P == IntMatrix::from_rows({{3, 0, 1}, {0, 2, 1}}));
        CHECK(r.cover_order == 1);
    }
    SUBCASE("(0,0,1) case 5") {
        auto r = cokernel_matrix({0, 0, 1}, 5);
        CHECK(r.P == IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}));
        CHECK(r.cover_order == 1);
    }
    SUBCASE("(2,3,-4) case 1 needs a double cover") {
        auto r = cokernel_matrix({2, 3, -4}, 1);
        CHECK(r.P == IntMatrix::from_rows({{2, 0, 1}, {0, 4, 3}}));
        CHECK(r.cover_order == 2);
        CHECK(r.cover_order == minor_gcd_2x3(r.P));
    }
    SUBCASE("pattern mismatch") {
        CHECK_THROWS_AS(cokernel_matrix({2, 3, 6}, 1), CaseMismatchError);
        CHECK_THROWS_AS(cokernel_matrix({0, 3, 6}, 2), CaseMismatchError);
    }
    SUBCASE("cover orders of the worked weight columns") {
        CHECK(cokernel_matrix({1, 1, -1}, 1).cover_order == 1);
        CHECK(cokernel_matrix({2, 3, 6}, 2).cover_order == 1);
        CHECK(cokernel_matrix({1, 1, -3}, 1).cover_order == 3);
        CHECK(cokernel_matrix({1, 3, -3}, 1).cover_order == 1);
    }
}

TEST_CASE("P annihilates F and the section hits 1 across all cases") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> dist(1, 50);
    auto coprime3 = [&](Int& a, Int& b, Int& c) {
        do {
            a = dist(rng);
            b = dist(rng);
            c = dist(rng);
        } while (gcd(gcd(a, b), c) != 1);
    };
    for (int iter = 0; iter < 200; ++iter) {
        Int a, b, c;
        coprime3(a, b, c);
        std::vector<std::pair<int, IntVec>> cases = {
            {1, {a, b, -c}}, {2, {a, b, c}}};
        if (gcd(b, c) == 1) {
            cases.push_back({3, {0, b, c}});
            cases.push_back({4, {0, b, -c}});
        }
        cases.push_back({5, {0, 0, 1}});
        for (const auto& [id, f] : cases) {
            auto r = cokernel_matrix(f, id);
            CHECK((r.P * IntMatrix::column(f)).is_zero());
            IntVec s = section_of(f);
            CHECK(is_valid_section(s, f));
            CHECK(r.cover_order == minor_gcd_2x3(r.P));
            WeightData wd{f, s, r.P, r.cover_order};
            CHECK(wd.consistent());
        }
    }
}
