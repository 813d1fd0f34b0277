#pragma once

// Polyhedral divisors D = sum Delta_i . D_i on a base variety, their
// evaluation divisors D(u), properness on curves and the total-transform
// minimality test on the blow-up base.

#include <map>
#include <string>
#include <vector>

#include "tvar/base_geometry.hpp"
#include "tvar/polyhedron.hpp"

namespace tvar::pdiv {

class PolyhedralDivisor {
public:
    // Coefficients equal to the tail cone are normalized away. Every stored
    // coefficient must have tail cone equal to sigma.
    PolyhedralDivisor(geom::BaseVariety base, convex::RationalCone tail,
                      std::vector<geom::PrimeDivisor> divisors,
                      std::map<std::string, convex::SigmaPolyhedron> coefficients);

    const geom::BaseVariety& base() const { return base_; }
    const convex::RationalCone& tail() const { return tail_; }
    const std::vector<geom::PrimeDivisor>& divisors() const { return divisors_; }
    const std::map<std::string, convex::SigmaPolyhedron>& coefficients() const {
        return coefficients_;
    }
    std::size_t rank() const { return tail_.ambient_rank(); }

    bool has_coefficient(const std::string& id) const {
        return coefficients_.count(id) != 0;
    }
    const geom::PrimeDivisor* find_divisor(const std::string& id) const;

    // Divisors that actually appear in D (nontrivial coefficient).
    std::vector<geom::PrimeDivisor> support() const;

private:
    geom::BaseVariety base_;
    convex::RationalCone tail_;
    std::vector<geom::PrimeDivisor> divisors_;
    std::map<std::string, convex::SigmaPolyhedron> coefficients_;
};

// Rational Weil divisor: finitely many rational coefficients.
using WeilQDivisor = std::map<std::string, Rat>;

// D(u) = sum min_{v in Delta_i} <u, v> . D_i. Throws EvaluationDomainError
// when u pairs negatively with the tail and a stored coefficient is
// unbounded in that direction.
WeilQDivisor evaluate(const PolyhedralDivisor& d, const IntVec& u);

// Semi-ample + big test for divisors on a curve base. On the affine line
// every divisor qualifies; on the projective line the degree of D(u) must be
// nonnegative on the rays of the dual tail cone and positive somewhere in
// its relative interior (the degree is concave in u, so one interior sample
// decides bigness once the rays pass).
bool is_proper_on_curve(const PolyhedralDivisor& d);

// False exactly when the exceptional coefficient equals the
// multiplicity-weighted Minkowski sum of the coefficients of the divisors
// through the origin, i.e. when D is a total transform from the plane.
bool is_minimal_on_blowup(const PolyhedralDivisor& d, const geom::IncidenceData& incidence,
                          const std::string& exceptional_id = "E");

} // namespace tvar::pdiv
