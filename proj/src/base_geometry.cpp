#include "tvar/base_geometry.hpp"

#include <algorithm>
#include <set>

#include "tvar/errors.hpp"

namespace tvar::geom {

BaseVariety BaseVariety::wps(const Int& a, const Int& b, const Int& c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("weighted projective plane needs positive weights");
    BaseVariety y;
    y.kind = BaseKind::WeightedProjectivePlane;
    y.wps_a = a;
    y.wps_b = b;
    y.wps_c = c;
    return y;
}

std::string BaseVariety::describe() const {
    switch (kind) {
        case BaseKind::AffinePlane: return "A^2";
        case BaseKind::BlowupAffinePlaneAtOrigin: return "blow-up of A^2 at the origin";
        case BaseKind::P1xA1: return "P^1 x A^1";
        case BaseKind::WeightedProjectivePlane:
            return "P(" + wps_a.str() + "," + wps_b.str() + "," + wps_c.str() + ")";
        case BaseKind::AffineLine: return "A^1";
        case BaseKind::ProjectiveLine: return "P^1";
        case BaseKind::UserSurface: return "user surface";
    }
    return "?";
}

std::string crossing_name(Crossing c) {
    switch (c) {
        case Crossing::Normal: return "normal";
        case Crossing::NonNormal: return "non_normal";
        case Crossing::Single: return "single";
        case Crossing::None: return "none";
    }
    return "?";
}

namespace {

Crossing derive_crossing(std::size_t ndiv, Crossing declared) {
    if (ndiv == 0) return Crossing::None;
    if (ndiv == 1) return Crossing::Single;
    return declared;
}

const PrimeDivisor* find_divisor(const std::vector<PrimeDivisor>& ds, const std::string& id) {
    for (const auto& d : ds)
        if (d.id == id) return &d;
    return nullptr;
}

bool any_exceptional(const std::vector<PrimeDivisor>& ds,
                     const std::vector<std::string>& ids) {
    for (const auto& id : ids) {
        const PrimeDivisor* d = find_divisor(ds, id);
        if (d && d->flavor == DivisorFlavor::Exceptional) return true;
    }
    return false;
}

} // namespace

std::vector<Stratum> catalog_strata(const BaseVariety& base,
                                    const std::vector<PrimeDivisor>& support,
                                    const IncidenceData& incidence) {
    if (base.kind == BaseKind::UserSurface) {
        if (!support.empty() && incidence.declared_strata.empty())
            throw IncompleteIncidenceError(
                "a user surface carries no geometry; declare its strata");
        std::vector<Stratum> out = incidence.declared_strata;
        for (auto& s : out) {
            s.crossing = derive_crossing(s.divisors_through.size(), s.crossing);
            s.includes_exceptional_image =
                s.includes_exceptional_image || any_exceptional(support, s.divisors_through);
        }
        return out;
    }

    std::vector<Stratum> out;
    // one stratum per single-divisor locus; the exceptional divisor of a
    // blow-up is contracted to the origin and only appears there
    for (const auto& d : support) {
        if (d.flavor == DivisorFlavor::Exceptional) continue;
        Stratum s;
        s.id = "on-" + d.id;
        s.divisors_through = {d.id};
        s.crossing = Crossing::Single;
        out.push_back(std::move(s));
    }

    if (base.kind == BaseKind::BlowupAffinePlaneAtOrigin) {
        Stratum origin;
        origin.id = "origin";
        for (const auto& d : support) {
            if (d.flavor == DivisorFlavor::Exceptional) {
                origin.divisors_through.push_back(d.id);
                continue;
            }
            auto it = incidence.origin_multiplicity.find(d.id);
            Int mult = 0;
            if (it != incidence.origin_multiplicity.end()) mult = it->second;
            else if (d.flavor == DivisorFlavor::Coordinate) mult = 1;
            if (mult >= 1) origin.divisors_through.push_back(d.id);
        }
        if (!origin.divisors_through.empty()) {
            origin.crossing = derive_crossing(origin.divisors_through.size(), Crossing::Normal);
            origin.includes_exceptional_image = true;
            out.push_back(std::move(origin));
        }
    } else if (base.kind == BaseKind::AffinePlane) {
        // the two coordinate axes cross normally at the origin
        std::vector<std::string> axes;
        for (const auto& d : support)
            if (d.flavor == DivisorFlavor::Coordinate) axes.push_back(d.id);
        if (axes.size() == 2) {
            Stratum s;
            s.id = "axes-origin";
            s.divisors_through = axes;
            s.crossing = Crossing::Normal;
            out.push_back(std::move(s));
        }
    } else if (base.kind == BaseKind::WeightedProjectivePlane) {
        // Only the crossing inside the distinguished smooth chart is
        // cataloged; the other two torus-fixed points may be quotient
        // singularities of the base and carry no local model.
        const PrimeDivisor* d1 = find_divisor(support, "D1");
        const PrimeDivisor* d2 = find_divisor(support, "D2");
        if (d1 && d2) {
            Stratum s;
            s.id = "D1-D2";
            s.divisors_through = {"D1", "D2"};
            s.crossing = Crossing::Normal;
            out.push_back(std::move(s));
        }
    }
    // P1xA1: the two sections {0} x A^1 and {inf} x A^1 are disjoint

    for (const auto& declared : incidence.declared_strata) {
        Stratum s = declared;
        s.crossing = derive_crossing(s.divisors_through.size(), s.crossing);
        s.includes_exceptional_image =
            s.includes_exceptional_image || any_exceptional(support, s.divisors_through);
        out.push_back(std::move(s));
    }

    Stratum generic;
    generic.id = "generic";
    generic.crossing = Crossing::None;
    out.push_back(std::move(generic));
    return out;
}

std::map<std::string, convex::SigmaPolyhedron> total_transform(
    const std::map<std::string, convex::SigmaPolyhedron>& coefficients,
    const std::vector<PrimeDivisor>& divisors,
    const IncidenceData& incidence,
    const convex::RationalCone& tail,
    const std::string& exceptional_id) {
    std::map<std::string, convex::SigmaPolyhedron> out = coefficients;
    std::optional<convex::SigmaPolyhedron> e_coeff;
    for (const auto& [id, poly] : coefficients) {
        const PrimeDivisor* d = find_divisor(divisors, id);
        auto it = incidence.origin_multiplicity.find(id);
        Int mult;
        if (it != incidence.origin_multiplicity.end()) {
            mult = it->second;
        } else if (d && d->flavor == DivisorFlavor::Coordinate) {
            mult = 1;
        } else {
            throw IncompleteIncidenceError("no origin multiplicity declared for '" +
                                           id + "'");
        }
        if (mult < 1) continue;
        convex::SigmaPolyhedron part = poly.scaled(mult);
        e_coeff = e_coeff ? e_coeff->minkowski_sum(part) : part;
    }
    if (!e_coeff) {
        // nothing through the origin: the exceptional coefficient is the
        // tail cone itself (the neutral element), i.e. absent
        return out;
    }
    // drop a coefficient equal to sigma
    convex::SigmaPolyhedron neutral(
        {RatVec(tail.ambient_rank(), Rat(0))}, tail);
    if (!(*e_coeff == neutral)) out.emplace(exceptional_id, *e_coeff);
    return out;
}

} // namespace tvar::geom
