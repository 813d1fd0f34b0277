#pragma once

// Symbolic catalog of base varieties and their incidence data. The library
// never manipulates equations of the base: a stratum records which prime
// divisors pass through it and whether they cross normally, which is all the
// smoothness criterion consumes.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tvar/polyhedron.hpp"
#include "tvar/rational.hpp"

namespace tvar::geom {

enum class BaseKind {
    AffinePlane,
    BlowupAffinePlaneAtOrigin,
    P1xA1,
    WeightedProjectivePlane,
    AffineLine,
    ProjectiveLine,
    UserSurface,
};

struct BaseVariety {
    BaseKind kind = BaseKind::AffinePlane;
    // weighted projective parameters, recorded as given (no normalization)
    Int wps_a = 0, wps_b = 0, wps_c = 0;

    static BaseVariety affine_plane() { return {BaseKind::AffinePlane}; }
    static BaseVariety blowup() { return {BaseKind::BlowupAffinePlaneAtOrigin}; }
    static BaseVariety p1xa1() { return {BaseKind::P1xA1}; }
    static BaseVariety wps(const Int& a, const Int& b, const Int& c);
    static BaseVariety affine_line() { return {BaseKind::AffineLine}; }
    static BaseVariety projective_line() { return {BaseKind::ProjectiveLine}; }
    static BaseVariety user_surface() { return {BaseKind::UserSurface}; }

    bool is_curve() const {
        return kind == BaseKind::AffineLine || kind == BaseKind::ProjectiveLine;
    }
    std::string describe() const;
};

enum class DivisorFlavor { Coordinate, Exceptional, StrictTransform, User };

struct PrimeDivisor {
    std::string id;
    DivisorFlavor flavor = DivisorFlavor::User;
    std::string notes;
};

enum class Crossing { Normal, NonNormal, Single, None };

std::string crossing_name(Crossing c);

struct Stratum {
    std::string id;
    std::vector<std::string> divisors_through;  // document order
    Crossing crossing = Crossing::None;
    bool includes_exceptional_image = false;
};

// Incidence inputs a document supplies alongside the divisor.
struct IncidenceData {
    std::vector<Stratum> declared_strata;            // multi-divisor crossings etc.
    std::map<std::string, Int> origin_multiplicity;  // for blow-up bases
};

// Enumerates the combinatorial stratum types of a base carrying the given
// support divisors: the generic stratum, one stratum per single-divisor
// locus, each declared pairwise intersection, and the blown-up-origin
// stratum on a blow-up base (assembled from E and the declared origin
// multiplicities). A UserSurface contributes exactly its declared strata.
std::vector<Stratum> catalog_strata(const BaseVariety& base,
                                    const std::vector<PrimeDivisor>& support,
                                    const IncidenceData& incidence);

// Pulls a divisor on the affine plane back along the blow-up at the origin:
// strict transforms keep their coefficients and the exceptional divisor
// acquires the multiplicity-weighted Minkowski sum of the coefficients of
// all divisors through the origin. Missing multiplicity data is an
// IncompleteIncidenceError except for coordinate axes, which default to 1.
std::map<std::string, convex::SigmaPolyhedron> total_transform(
    const std::map<std::string, convex::SigmaPolyhedron>& coefficients,
    const std::vector<PrimeDivisor>& divisors,
    const IncidenceData& incidence,
    const convex::RationalCone& tail,
    const std::string& exceptional_id = "E");

} // namespace tvar::geom
