#include "tvar/pdivisor.hpp"

#include <algorithm>

#include "tvar/errors.hpp"

namespace tvar::pdiv {

PolyhedralDivisor::PolyhedralDivisor(geom::BaseVariety base, convex::RationalCone tail,
                                     std::vector<geom::PrimeDivisor> divisors,
                                     std::map<std::string, convex::SigmaPolyhedron> coefficients)
    : base_(base), tail_(std::move(tail)), divisors_(std::move(divisors)) {
    if (tail_.contains_line())
        throw std::invalid_argument("tail cone must be strongly convex");
    convex::SigmaPolyhedron neutral({RatVec(tail_.ambient_rank(), Rat(0))}, tail_);
    for (auto& [id, poly] : coefficients) {
        if (!find_divisor(id))
            throw std::invalid_argument("coefficient for undeclared divisor '" + id + "'");
        if (!(poly.tail() == tail_))
            throw std::invalid_argument("coefficient of '" + id +
                                        "' has a different tail cone than the divisor");
        if (poly == neutral) continue;  // normalize sigma-coefficients away
        coefficients_.emplace(id, poly);
    }
}

const geom::PrimeDivisor* PolyhedralDivisor::find_divisor(const std::string& id) const {
    for (const auto& d : divisors_)
        if (d.id == id) return &d;
    return nullptr;
}

std::vector<geom::PrimeDivisor> PolyhedralDivisor::support() const {
    std::vector<geom::PrimeDivisor> out;
    for (const auto& d : divisors_)
        if (coefficients_.count(d.id)) out.push_back(d);
    return out;
}

WeilQDivisor evaluate(const PolyhedralDivisor& d, const IntVec& u) {
    if (u.size() != d.rank()) throw std::invalid_argument("evaluate: rank mismatch");
    WeilQDivisor out;
    for (const auto& [id, poly] : d.coefficients()) {
        convex::SupportValue v = poly.support_min(u);
        if (!v)
            throw EvaluationDomainError(
                "direction lies outside the dual tail cone; coefficient of '" + id +
                "' is unbounded below");
        out[id] = *v;
    }
    return out;
}

namespace {

// degree of D(u) on P^1: the sum of the coefficients
Rat degree_at(const PolyhedralDivisor& d, const IntVec& u) {
    Rat acc = 0;
    for (const auto& [id, poly] : d.coefficients()) {
        convex::SupportValue v = poly.support_min(u);
        if (!v) throw EvaluationDomainError("degree undefined outside the dual tail cone");
        acc += *v;
    }
    return acc;
}

} // namespace

bool is_proper_on_curve(const PolyhedralDivisor& d) {
    if (!d.base().is_curve())
        throw std::domain_error("is_proper_on_curve: base is not a curve");
    if (d.base().kind == geom::BaseKind::AffineLine) return true;

    std::vector<IntVec> rays = convex::dual_cone_generators(d.tail());
    for (const auto& u : rays)
        if (degree_at(d, u) < 0) return false;  // not semi-ample
    // Interior sample: the sum of the dual generators. The degree function
    // is concave and positively homogeneous, so once it is nonnegative on
    // the rays a single interior value decides bigness: a zero at an
    // interior point forces the degree to vanish identically.
    IntVec interior(d.rank(), Int(0));
    for (const auto& u : rays)
        for (std::size_t i = 0; i < u.size(); ++i) interior[i] += u[i];
    Rat deg = degree_at(d, interior);
    return deg > 0;
}

bool is_minimal_on_blowup(const PolyhedralDivisor& d, const geom::IncidenceData& incidence,
                          const std::string& exceptional_id) {
    if (d.base().kind != geom::BaseKind::BlowupAffinePlaneAtOrigin)
        throw std::domain_error("is_minimal_on_blowup: base is not the blow-up of A^2");
    std::optional<convex::SigmaPolyhedron> origin_sum;
    for (const auto& [id, poly] : d.coefficients()) {
        if (id == exceptional_id) continue;
        const geom::PrimeDivisor* div = d.find_divisor(id);
        auto it = incidence.origin_multiplicity.find(id);
        Int mult = 0;
        if (it != incidence.origin_multiplicity.end()) mult = it->second;
        else if (div && div->flavor == geom::DivisorFlavor::Coordinate) mult = 1;
        if (mult < 1) continue;
        convex::SigmaPolyhedron part = poly.scaled(mult);
        origin_sum = origin_sum ? origin_sum->minkowski_sum(part) : part;
    }
    convex::SigmaPolyhedron neutral({RatVec(d.rank(), Rat(0))}, d.tail());
    auto e_it = d.coefficients().find(exceptional_id);
    const convex::SigmaPolyhedron& e_coeff =
        e_it != d.coefficients().end() ? e_it->second : neutral;
    const convex::SigmaPolyhedron& origin = origin_sum ? *origin_sum : neutral;
    return !(e_coeff == origin);
}

} // namespace tvar::pdiv
