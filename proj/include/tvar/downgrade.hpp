#pragma once

// Forward downgrading: from a Gm weight column on A^3 to its combinatorial
// presentation (Y, D). Every weight column normalizes, by permuting
// coordinates and possibly inverting the action, to one of five sign
// patterns; each pattern has an explicit base and coefficient formula.

#include <array>
#include <optional>

#include "tvar/lattice.hpp"
#include "tvar/pdivisor.hpp"

namespace tvar::down {

struct WeightCase {
    int case_id = 0;                  // 1..5
    IntVec normalized_f;              // matches the sign pattern of case_id
    std::array<std::size_t, 3> perm;  // normalized_f[i] = (+-) input_f[perm[i]]
    bool sign_flip = false;           // true when the action was inverted
};

// Normalizes a nonzero coprime weight column: zeros first, then ascending
// absolute value, the (single) negative entry last; the global sign is
// flipped when negatives outnumber positives. Deterministic; stable on ties.
WeightCase classify(const IntVec& f);

struct Presentation {
    WeightCase wcase;
    pdiv::PolyhedralDivisor divisor;
    geom::IncidenceData incidence;  // origin multiplicities on the blow-up
    lat::WeightData weight_data;
    // When the cover order exceeds 1 the data describes a T-invariant cyclic
    // cover of affine space rather than affine space itself.
    bool describes_cyclic_cover = false;
};

// Builds the presentation for a weight column. The optional section is given
// in the input coordinate order and is transported along the classify
// permutation and sign flip; it must satisfy s*F = 1 (SectionMismatchError).
// Without a section the canonical one from section_of is used.
Presentation presentation_for(const IntVec& f,
                              const std::optional<IntVec>& section = std::nullopt);

// Fan rays of P(a,b,c) built from a genuine cokernel of (a,b,c)^t: the
// primitive ray through the image of each standard basis vector, solved
// deterministically by unimodular column reduction. The rays span Z^2 and
// satisfy a*l1*v1 + b*l2*v2 + c*l3*v3 = 0 where li is the content of the
// unreduced image (li = 1, and the relation loses the li, exactly when the
// weights are pairwise well-formed).
std::array<IntVec, 3> wps_chart_rays(const Int& a, const Int& b, const Int& c);

} // namespace tvar::down
