#include "doctest.h"

#include <random>

#include "tvar/document.hpp"
#include "tvar/errors.hpp"
#include "tvar/smooth.hpp"

using namespace tvar;
using namespace tvar::smooth;
using convex::CanonicalR1;
using convex::RationalCone;
using convex::SigmaPolyhedron;

namespace {

LocalEntry ord_point(const Rat& q) {
    LocalEntry e;
    e.divisor_id = "D";
    e.poly.kind = CanonicalR1::Kind::Point;
    e.poly.lo = e.poly.hi = q;
    return e;
}

LocalEntry ord_interval(const Rat& lo, const Rat& hi) {
    LocalEntry e;
    e.divisor_id = "D";
    e.poly.kind = CanonicalR1::Kind::Interval;
    e.poly.lo = lo;
    e.poly.hi = hi;
    return e;
}

LocalEntry ord_halfline(const Rat& lo) {
    LocalEntry e;
    e.divisor_id = "D";
    e.poly.kind = CanonicalR1::Kind::HalfUp;
    e.poly.lo = lo;
    return e;
}

LocalEntry exc_interval(const Rat& lo, const Rat& hi) {
    LocalEntry e = ord_interval(lo, hi);
    e.divisor_id = "E";
    e.exceptional = true;
    return e;
}

LocalModelData germ(std::vector<LocalEntry> entries, geom::Crossing crossing, int tail_dir,
                    bool origin_image) {
    LocalModelData d;
    d.entries = std::move(entries);
    d.crossing = crossing;
    d.tail_dir = tail_dir;
    d.stratum.id = "test";
    d.stratum.includes_exceptional_image = origin_image;
    for (std::size_t i = 0; i < d.entries.size(); ++i) {
        d.entries[i].divisor_id += std::to_string(i);
        d.stratum.divisors_through.push_back(d.entries[i].divisor_id);
    }
    return d;
}

// brute-force oracle for the smoothness of A^2 / mu_c with weights (a, b):
// embedding dimension of the invariant monoid algebra, i.e. the number of
// irreducible elements of {(i,j) >= 0 : a i + b j == 0 mod c}
int invariant_ring_embdim(long a, long b, long c) {
    std::vector<std::pair<int, int>> elems;
    for (int i = 0; i <= c; ++i)
        for (int j = 0; j <= c; ++j) {
            if (i == 0 && j == 0) continue;
            if ((a * i + b * j) % c == 0) elems.push_back({i, j});
        }
    int irreducible = 0;
    for (const auto& [i, j] : elems) {
        bool reducible = false;
        for (const auto& [p, q] : elems) {
            if (p > i || q > j || (p == i && q == j)) continue;
            int ri = i - p, rj = j - q;
            if (ri == 0 && rj == 0) continue;
            if ((a * ri + b * rj) % c == 0) {
                reducible = true;
                break;
            }
        }
        if (!reducible) ++irreducible;
    }
    return irreducible;
}

} // namespace

TEST_CASE("toric smoothness") {
    CHECK(check_toric(RationalCone(
        3, {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}})));
    CHECK_FALSE(check_toric(RationalCone(2, {{Int(1), Int(0)}, {Int(1), Int(2)}})));
    CHECK(check_toric(RationalCone::zero(2)));
}

TEST_CASE("matching the worked origin germs") {
    SUBCASE("the elliptic-curve blow-up germ") {
        auto d = germ({ord_point(Rat(1, 2)), ord_point(Rat(-1, 3)),
                       exc_interval(0, Rat(1, 6))},
                      geom::Crossing::Normal, 0, true);
        MatchResult m = match_local(d);
        REQUIRE(m.matched);
        CHECK(m.case_id == 1);
        CHECK(m.a == 2);
        CHECK(m.b == 3);
        CHECK(m.c == 6);
        CHECK(m.section == IntVec{-1, 1, 0});
        CHECK(m.swapped);
        CHECK_FALSE(m.orientation_flipped);
        CHECK(match_reproduces_germ(m, d));
    }
    SUBCASE("the single-curve germ over a product of elliptic curves") {
        auto d = germ({ord_point(Rat(1, 3)), exc_interval(0, Rat(1, 3))},
                      geom::Crossing::Normal, 0, true);
        MatchResult m = match_local(d);
        REQUIRE(m.matched);
        CHECK(m.case_id == 1);
        // cokernel-index-1 representative of the family; the parameter
        // triple (1,1,3) quoted alongside this germ has index 3
        CHECK(m.a == 1);
        CHECK(m.b == 3);
        CHECK(m.c == 3);
        CHECK(match_reproduces_germ(m, d));
    }
    SUBCASE("exceptional alone: the hyperbolic weights") {
        auto d = germ({exc_interval(-1, 0)}, geom::Crossing::Single, 0, true);
        MatchResult m = match_local(d);
        REQUIRE(m.matched);
        CHECK(m.weights() == IntVec{1, 1, -1});
        CHECK(match_reproduces_germ(m, d));
    }
    SUBCASE("exceptional alone, flipped orientation") {
        auto d = germ({exc_interval(0, Rat(1, 6))}, geom::Crossing::Single, 0, true);
        MatchResult m = match_local(d);
        REQUIRE(m.matched);
        CHECK(m.orientation_flipped);
        CHECK(match_reproduces_germ(m, d));
    }
}

TEST_CASE("definitive refutations") {
    SUBCASE("width above one") {
        for (long p = 2; p <= 5; ++p) {
            auto d = germ({exc_interval(Rat(-p), 0)}, geom::Crossing::Single, 0, true);
            for (long bound : {1L, 1000000L}) {
                MatchResult m = match_local(d, Int(bound));
                REQUIRE_FALSE(m.matched);
                CHECK(m.reason == Refutation::WidthExceedsBound);
                CHECK(m.definitive);
            }
        }
    }
    SUBCASE("non-normal crossings") {
        auto d = germ({ord_point(Rat(1, 2)), ord_point(Rat(-1, 3))},
                      geom::Crossing::NonNormal, 0, false);
        MatchResult m = match_local(d);
        REQUIRE_FALSE(m.matched);
        CHECK(m.reason == Refutation::NonNormalCrossing);
        CHECK(m.definitive);
    }
    SUBCASE("exceptional singleton") {
        auto e = ord_point(Rat(1, 2));
        e.exceptional = true;
        auto d = germ({e}, geom::Crossing::Single, 0, true);
        MatchResult m = match_local(d);
        REQUIRE_FALSE(m.matched);
        CHECK(m.definitive);
    }
    SUBCASE("exceptional interval with incompatible endpoints") {
        // width 1/2 forces endpoints -1/2..0 or 0..1/2 when no divisor
        // crosses the exceptional curve
        auto d = germ({exc_interval(1, Rat(3, 2))}, geom::Crossing::Single, 0, true);
        MatchResult m = match_local(d);
        REQUIRE_FALSE(m.matched);
        CHECK(m.reason == Refutation::NoDiophantineSolution);
        CHECK(m.definitive);
    }
    SUBCASE("origin stratum without an exceptional coefficient") {
        auto d = germ({ord_point(Rat(1, 2))}, geom::Crossing::Single, 0, true);
        MatchResult m = match_local(d);
        REQUIRE_FALSE(m.matched);
        CHECK(m.definitive);
    }
    SUBCASE("interval at a two-divisor crossing") {
        auto d = germ({ord_point(Rat(1, 2)), ord_interval(0, Rat(1, 2))},
                      geom::Crossing::Normal, 0, false);
        MatchResult m = match_local(d);
        REQUIRE_FALSE(m.matched);
        CHECK(m.definitive);
    }
    SUBCASE("unsupported shapes stay inconclusive") {
        auto d = germ({ord_point(1), ord_point(2), ord_point(3)},
                      geom::Crossing::Normal, 0, false);
        MatchResult m = match_local(d);
        REQUIRE_FALSE(m.matched);
        CHECK(m.reason == Refutation::Unsupported);
        CHECK_FALSE(m.definitive);
    }
}

TEST_CASE("single-divisor germs always embed") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> numer(-30, 30), denom(1, 20);
    int done = 0;
    while (done < 200) {
        Rat q(numer(rng), denom(rng));
        if (q == 0) continue;
        ++done;
        auto d = germ({ord_point(q)}, geom::Crossing::Single, 0, false);
        MatchResult m = match_local(d);
        REQUIRE(m.matched);
        CHECK(m.case_id == 1);
        CHECK(match_reproduces_germ(m, d));

        auto h = germ({ord_halfline(q)}, geom::Crossing::Single, 1, false);
        MatchResult mh = match_local(h);
        REQUIRE(mh.matched);
        CHECK(mh.case_id == 3);
        CHECK(match_reproduces_germ(mh, h));
    }
}

TEST_CASE("single ordinary intervals: the bounded-coefficient family") {
    SUBCASE("a width-1/2 interval with integral scaled endpoints") {
        auto d = germ({ord_interval(0, Rat(1, 2))}, geom::Crossing::Single, 0, false);
        MatchResult m = match_local(d);
        REQUIRE(m.matched);
        CHECK(m.case_id == 4);
        CHECK(m.b == 1);
        CHECK(m.c == 2);
        CHECK(match_reproduces_germ(m, d));
    }
    SUBCASE("non-integral reciprocal width is refuted outright") {
        auto d = germ({ord_interval(0, Rat(2, 3))}, geom::Crossing::Single, 0, false);
        MatchResult m = match_local(d);
        REQUIRE_FALSE(m.matched);
        CHECK(m.definitive);
    }
    SUBCASE("incompatible endpoints are refuted outright") {
        auto d = germ({ord_interval(Rat(1, 7), Rat(1, 7) + Rat(1, 6))},
                      geom::Crossing::Single, 0, false);
        MatchResult m = match_local(d);
        REQUIRE_FALSE(m.matched);
        CHECK(m.definitive);
    }
    SUBCASE("orientation flip can rescue an interval") {
        // [-1/2, 0] matches directly; [0, 1/2] needs beta,gamma from the
        // mirror; both must succeed
        for (auto [lo, hi] : std::vector<std::pair<Rat, Rat>>{{Rat(-1, 2), Rat(0)},
                                                              {Rat(0), Rat(1, 2)}}) {
            auto d = germ({ord_interval(lo, hi)}, geom::Crossing::Single, 0, false);
            MatchResult m = match_local(d);
            REQUIRE(m.matched);
            CHECK(m.case_id == 4);
            CHECK(match_reproduces_germ(m, d));
        }
    }
}

TEST_CASE("bounded searches report inconclusively") {
    // 1/2 and 1/2 at a crossing: no small family fits, and a bounded sweep
    // cannot rule out a large one
    auto d = germ({ord_point(Rat(1, 2)), ord_point(Rat(1, 2))},
                  geom::Crossing::Normal, 0, false);
    MatchResult m = match_local(d, Int(40));
    REQUIRE_FALSE(m.matched);
    CHECK(m.reason == Refutation::NoDiophantineSolution);
    CHECK_FALSE(m.definitive);
}

TEST_CASE("chart smoothness of weighted projective planes") {
    CHECK(chart_smooth_wps(2, 3, 6));
    CHECK(chart_smooth_wps(1, 1, 1));
    CHECK_FALSE(chart_smooth_wps(1, 1, 2));
    for (long p = 2; p <= 9; ++p) CHECK_FALSE(chart_smooth_wps(1, 1, p));

    // closed-form candidate lcm(gcd(c,a), gcd(c,b)) == c, validated against
    // both the ray determinant and the invariant-ring oracle
    for (long a = 1; a <= 10; ++a)
        for (long b = 1; b <= 10; ++b)
            for (long c = 1; c <= 10; ++c) {
                if (gcd(gcd(Int(a), Int(b)), Int(c)) != 1) continue;
                bool chart = chart_smooth_wps(a, b, c);
                CHECK(chart == (invariant_ring_embdim(a, b, c) <= 2));
                CHECK(chart == (lcm(gcd(Int(c), Int(a)), gcd(Int(c), Int(b))) == c));
            }
}

TEST_CASE("complexity-one criterion over curves") {
    using geom::BaseVariety;
    auto curve_div = [](BaseVariety base, RationalCone tail,
                        std::vector<std::pair<std::string, SigmaPolyhedron>> cs) {
        std::vector<geom::PrimeDivisor> divisors;
        std::map<std::string, SigmaPolyhedron> coeffs;
        for (auto& [id, p] : cs) {
            divisors.push_back({id, geom::DivisorFlavor::User, ""});
            coeffs.emplace(id, p);
        }
        return pdiv::PolyhedralDivisor(base, tail, divisors, coeffs);
    };

    SUBCASE("affine base, trivial tail") {
        auto d = curve_div(BaseVariety::affine_line(), RationalCone::zero(1),
                           {{"z0", SigmaPolyhedron::singleton(Rat(1, 2))}});
        CHECK(check_complexity1(d) == Verdict::Smooth);
    }
    SUBCASE("affine base, ray tail, half-integral coefficient") {
        auto d = curve_div(BaseVariety::affine_line(), RationalCone::ray({Int(1)}),
                           {{"z0", SigmaPolyhedron::halfline(Rat(1, 2), +1)}});
        CHECK(check_complexity1(d) == Verdict::Singular);
    }
    SUBCASE("trivial divisor with ray tail is the affine plane pattern") {
        auto d = curve_div(BaseVariety::affine_line(), RationalCone::ray({Int(1)}), {});
        CHECK(check_complexity1(d) == Verdict::Smooth);
    }
    SUBCASE("projective base: degree zero fails properness") {
        auto d = curve_div(BaseVariety::projective_line(), RationalCone::zero(1),
                           {{"z0", SigmaPolyhedron::singleton(-1)},
                            {"z1", SigmaPolyhedron::singleton(1)}});
        CHECK_THROWS_AS(check_complexity1(d), NotPDivisorError);
    }
    SUBCASE("projective base: the plane with weights (3,2)") {
        auto d = curve_div(BaseVariety::projective_line(), RationalCone::ray({Int(1)}),
                           {{"z0", SigmaPolyhedron::halfline(Rat(1, 2), +1)},
                            {"z1", SigmaPolyhedron::halfline(Rat(-1, 3), +1)}});
        CHECK(check_complexity1(d) == Verdict::Smooth);
    }
    SUBCASE("projective base: both endpoints a half fails") {
        auto d = curve_div(BaseVariety::projective_line(), RationalCone::ray({Int(1)}),
                           {{"z0", SigmaPolyhedron::halfline(Rat(1, 2), +1)},
                            {"z1", SigmaPolyhedron::halfline(Rat(1, 2), +1)}});
        CHECK(check_complexity1(d) == Verdict::Singular);
    }
}

TEST_CASE("full checker on the fixture data") {
    SUBCASE("non-normal crossing flips the verdict, nothing else does") {
        std::string text = R"(base blowup
divisor D1 strict_transform point 1/2
divisor D2 strict_transform point -1/3
divisor E exceptional interval 0 1/6
origin_mult D1 1
origin_mult D2 1
stratum p D1 D2 non_normal
)";
        auto doc = io::parse_document_string(text);
        auto cert = check_gm_threefold(doc.build_divisor(), doc.incidence);
        CHECK(cert.verdict == Verdict::Singular);

        std::string normal_text = text;
        normal_text.replace(normal_text.find("non_normal"), 10, "normal");
        auto doc2 = io::parse_document_string(normal_text);
        auto cert2 = check_gm_threefold(doc2.build_divisor(), doc2.incidence);
        CHECK(cert2.verdict == Verdict::Smooth);
    }
    SUBCASE("total transforms violate the minimality hypothesis") {
        std::string text = R"(base blowup
divisor D1 strict_transform point 1/2
divisor E exceptional point 1/2
origin_mult D1 1
)";
        auto doc = io::parse_document_string(text);
        CHECK_THROWS_AS(check_gm_threefold(doc.build_divisor(), doc.incidence),
                        MinimalityError);
    }
    SUBCASE("rank-1 torus required") {
        pdiv::PolyhedralDivisor d(geom::BaseVariety::affine_plane(), RationalCone::zero(2),
                                  {}, {});
        CHECK_THROWS_AS(check_gm_threefold(d, {}), std::domain_error);
    }
}

TEST_CASE("documents with a negative tail ray match through inversion") {
    auto doc = io::parse_document_string(R"(base p1xa1
tail -1
divisor D2 coordinate halfline 1/2
divisor D3 coordinate halfline -1/2
)");
    auto cert = check_gm_threefold(doc.build_divisor(), doc.incidence);
    CHECK(cert.verdict == Verdict::Smooth);
    for (const auto& sr : cert.strata) {
        CHECK(sr.result.matched);
        if (!sr.stratum.divisors_through.empty()) CHECK(sr.result.orientation_flipped);
    }
}

TEST_CASE("a ray-tail presentation on the weighted plane certifies") {
    auto doc = io::parse_document_string(R"(base wps 2 3 6
tail 1
divisor D1 coordinate halfline -1/3
divisor D2 coordinate halfline 1/2
)");
    auto cert = check_gm_threefold(doc.build_divisor(), doc.incidence);
    CHECK(cert.verdict == Verdict::Smooth);
    bool saw_crossing = false;
    for (const auto& sr : cert.strata)
        if (sr.stratum.id == "D1-D2") {
            saw_crossing = true;
            CHECK(sr.result.case_id == 2);
            CHECK(sr.result.a == 2);
            CHECK(sr.result.b == 3);
            CHECK(sr.result.c == 6);
        }
    CHECK(saw_crossing);
}

TEST_CASE("round-trip: presentations certify as smooth with the right case") {
    std::mt19937_64 rng(501);
    std::uniform_int_distribution<long> mag(1, 50);
    std::uniform_int_distribution<long> shift(-2, 2);

    for (int case_id = 1; case_id <= 5; ++case_id) {
        int done = 0;
        while (done < 40) {
            Int a = mag(rng), b = mag(rng), c = mag(rng);
            IntVec f;
            switch (case_id) {
                case 1: f = {a, b, -c}; break;
                case 2: f = {a, b, c}; break;
                case 3: f = {Int(0), b, c}; break;
                case 4: f = {Int(0), b, -c}; break;
                case 5: f = {Int(0), Int(0), Int(1)}; break;
            }
            if (gcd(gcd(iabs(f[0]), iabs(f[1])), iabs(f[2])) != 1) continue;
            // work with the normalized column so sections line up with slots
            IntVec nf = down::classify(f).normalized_f;
            auto cok = lat::cokernel_matrix(nf, case_id);
            if (cok.cover_order != 1) continue;
            IntVec s = lat::section_of(nf);
            for (int row = 0; row < 2; ++row) {
                Int k = shift(rng);
                for (int j = 0; j < 3; ++j) s[j] += k * cok.P.at(row, j);
            }
            if (case_id == 2 && (s[0] == 0 || s[1] == 0)) continue;
            if (case_id == 3 && s[1] == 0) continue;
            ++done;

            down::Presentation pres = down::presentation_for(nf, s);
            REQUIRE(pres.wcase.case_id == case_id);
            auto strata = geom::catalog_strata(pres.divisor.base(), pres.divisor.support(),
                                               pres.incidence);
            auto germs = extract_local_data(pres.divisor, strata);
            for (const auto& g : germs) {
                MatchResult m = match_local(g);
                REQUIRE(m.matched);
                CHECK(match_reproduces_germ(m, g));
                if (g.entries.size() >= 2 || case_id == 5) CHECK(m.case_id == case_id);
                if (case_id == 1 && !g.entries.empty()) CHECK(m.case_id == 1);
                if ((case_id == 3 || case_id == 4) && !g.entries.empty())
                    CHECK(m.case_id == case_id);
            }
        }
    }
}
