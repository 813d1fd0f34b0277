#include "tvar/downgrade.hpp"

#include <algorithm>
#include <numeric>

#include "tvar/errors.hpp"

namespace tvar::down {

using convex::RationalCone;
using convex::SigmaPolyhedron;

WeightCase classify(const IntVec& f) {
    if (f.size() != 3) throw std::invalid_argument("classify: expected 3 weights");
    if (f[0] == 0 && f[1] == 0 && f[2] == 0)
        throw std::invalid_argument("classify: zero weight column");
    Int g = gcd(gcd(iabs(f[0]), iabs(f[1])), iabs(f[2]));
    if (g != 1)
        throw NoSectionError("weights have gcd " + g.str() + "; divide out the kernel first");

    int negatives = 0, positives = 0;
    Int first_nonzero = 0;
    for (const Int& e : f) {
        if (e < 0) ++negatives;
        if (e > 0) ++positives;
        if (first_nonzero == 0) first_nonzero = e;
    }
    WeightCase wc;
    // ties (one positive, one negative entry) break on the leading sign so
    // that F and -F normalize to the same column
    wc.sign_flip = negatives > positives || (negatives == positives && first_nonzero < 0);
    IntVec h(3);
    for (int i = 0; i < 3; ++i) h[i] = wc.sign_flip ? Int(-f[i]) : f[i];

    std::array<std::size_t, 3> idx{0, 1, 2};
    auto key = [&](std::size_t i) {
        // zeros first, positives by ascending absolute value, negative last
        int cls = h[i] == 0 ? 0 : (h[i] > 0 ? 1 : 2);
        return std::pair<int, Int>(cls, iabs(h[i]));
    };
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    wc.perm = idx;
    wc.normalized_f = {h[idx[0]], h[idx[1]], h[idx[2]]};

    const IntVec& n = wc.normalized_f;
    int zeros = 0, neg = 0;
    for (const Int& e : n) {
        if (e == 0) ++zeros;
        if (e < 0) ++neg;
    }
    if (zeros == 0)
        wc.case_id = neg == 1 ? 1 : 2;
    else if (zeros == 1)
        wc.case_id = neg == 1 ? 4 : 3;
    else
        wc.case_id = 5;
    if (!lat::matches_case_pattern(n, wc.case_id))
        throw std::logic_error("classify: normalization failed");
    return wc;
}

namespace {

SigmaPolyhedron r1_singleton(const Rat& q) { return SigmaPolyhedron::singleton(q); }

geom::PrimeDivisor make_div(const std::string& id, geom::DivisorFlavor flavor) {
    return geom::PrimeDivisor{id, flavor, ""};
}

} // namespace

Presentation presentation_for(const IntVec& f, const std::optional<IntVec>& section) {
    WeightCase wc = classify(f);
    const IntVec& nf = wc.normalized_f;

    IntVec s;
    if (section) {
        if (section->size() != 3)
            throw SectionMismatchError("section must have 3 entries");
        // transport into normalized coordinates
        s.resize(3);
        for (int i = 0; i < 3; ++i) {
            Int v = (*section)[wc.perm[i]];
            s[i] = wc.sign_flip ? Int(-v) : v;
        }
        if (!lat::is_valid_section(s, nf))
            throw SectionMismatchError("section does not satisfy s*F = 1");
    } else {
        s = lat::section_of(nf);
    }
    const Int &alpha = s[0], &beta = s[1], &gamma = s[2];

    lat::CokernelResult cok = lat::cokernel_matrix(nf, wc.case_id);

    geom::BaseVariety base;
    RationalCone tail = RationalCone::zero(1);
    std::vector<geom::PrimeDivisor> divisors;
    std::map<std::string, SigmaPolyhedron> coeffs;
    geom::IncidenceData incidence;

    switch (wc.case_id) {
        case 1: {
            Int a = nf[0], b = nf[1], c = -nf[2];
            Int ra = lat::rho(a, c), rb = lat::rho(b, c);
            Int d = lat::delta(a, b, c);
            base = geom::BaseVariety::blowup();
            divisors = {make_div("D1", geom::DivisorFlavor::StrictTransform),
                        make_div("D2", geom::DivisorFlavor::StrictTransform),
                        make_div("E", geom::DivisorFlavor::Exceptional)};
            coeffs.emplace("D1", r1_singleton(Rat(alpha * ra, c)));
            coeffs.emplace("D2", r1_singleton(Rat(beta * rb, c)));
            Rat lo(gamma, d);
            coeffs.emplace("E", SigmaPolyhedron::interval(lo, lo + Rat(1, d * c)));
            incidence.origin_multiplicity["D1"] = 1;
            incidence.origin_multiplicity["D2"] = 1;
            break;
        }
        case 2: {
            Int a = nf[0], b = nf[1], c = nf[2];
            Int ra = lat::rho(a, c), rb = lat::rho(b, c);
            Int d = lat::delta(a, b, c);
            base = geom::BaseVariety::wps(a, b, c);
            tail = RationalCone::ray({Int(1)});
            divisors = {make_div("D1", geom::DivisorFlavor::Coordinate),
                        make_div("D2", geom::DivisorFlavor::Coordinate),
                        make_div("D3", geom::DivisorFlavor::Coordinate)};
            coeffs.emplace("D1", SigmaPolyhedron::halfline(Rat(alpha * ra, c), +1));
            coeffs.emplace("D2", SigmaPolyhedron::halfline(Rat(beta * rb, c), +1));
            coeffs.emplace("D3", SigmaPolyhedron::halfline(Rat(gamma, d), +1));
            break;
        }
        case 3: {
            Int b = nf[1], c = nf[2];
            Int rb = lat::rho(b, c);
            base = geom::BaseVariety::p1xa1();
            tail = RationalCone::ray({Int(1)});
            divisors = {make_div("D2", geom::DivisorFlavor::Coordinate),
                        make_div("D3", geom::DivisorFlavor::Coordinate)};
            Rat q(beta * rb, c);
            coeffs.emplace("D2", SigmaPolyhedron::halfline(q, +1));
            coeffs.emplace("D3", SigmaPolyhedron::halfline(-q, +1));
            break;
        }
        case 4: {
            Int b = nf[1], c = -nf[2];
            Int rb = lat::rho(b, c);
            base = geom::BaseVariety::affine_plane();
            divisors = {make_div("D2", geom::DivisorFlavor::Coordinate)};
            coeffs.emplace("D2", SigmaPolyhedron::interval(Rat(gamma * rb, b), Rat(beta * rb, c)));
            break;
        }
        case 5: {
            base = geom::BaseVariety::affine_plane();
            tail = RationalCone::ray({Int(1)});
            break;
        }
    }

    pdiv::PolyhedralDivisor divisor(base, tail, std::move(divisors), std::move(coeffs));
    lat::WeightData wd{nf, s, cok.P, cok.cover_order};
    Presentation out{wc, std::move(divisor), std::move(incidence), std::move(wd),
                     cok.cover_order > 1};
    return out;
}

std::array<IntVec, 3> wps_chart_rays(const Int& a, const Int& b, const Int& c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::domain_error("wps_chart_rays: weights must be positive");
    if (gcd(gcd(a, b), c) != 1)
        throw std::domain_error("wps_chart_rays: weights must have gcd 1");
    // U * (a,b,c)^t = (1,0,0)^t; rows 2 and 3 of U form a genuine cokernel,
    // so the columns of that 2x3 block are the unreduced ray images.
    lat::IntMatrix u = lat::column_reduce_unimodular({a, b, c});
    std::array<IntVec, 3> rays;
    for (std::size_t j = 0; j < 3; ++j)
        rays[j] = convex::primitive(IntVec{u.at(1, j), u.at(2, j)});
    return rays;
}

} // namespace tvar::down
