#pragma once

// Smoothness criteria for T-varieties given by combinatorial data:
//  - toric (complexity 0): unimodularity of the cone;
//  - complexity one over a curve: per-coefficient cone test on an affine
//    base, global match against downgraded linear actions over P^1;
//  - Gm-threefolds of complexity two: etale-local matching of each stratum
//    germ against the five families of linear Gm-actions on A^3.

#include <string>
#include <vector>

#include "tvar/downgrade.hpp"
#include "tvar/pdivisor.hpp"

namespace tvar::smooth {

enum class Verdict { Smooth, Singular, Inconclusive };

std::string verdict_name(Verdict v);

enum class Refutation {
    NonNormalCrossing,
    WidthExceedsBound,
    NoDiophantineSolution,
    Unsupported,
};

std::string refutation_name(Refutation r);

struct LocalEntry {
    std::string divisor_id;
    bool exceptional = false;
    convex::CanonicalR1 poly;
};

// The combinatorial germ of the divisor at one stratum: the coefficients of
// the divisors through it, in canonical rank-1 form.
struct LocalModelData {
    geom::Stratum stratum;
    std::vector<LocalEntry> entries;
    geom::Crossing crossing = geom::Crossing::None;
    int tail_dir = 0;  // recession of the ambient divisor: -1, 0, +1
};

struct MatchResult {
    bool matched = false;

    // set when matched
    int case_id = 0;
    Int a = 0, b = 0, c = 0;     // case parameters (unused ones stay 0)
    IntVec section;              // (alpha, beta, gamma)
    bool swapped = false;        // two-divisor germs: entries assigned to
                                 // model slots in reversed order
    bool orientation_flipped = false;  // matched after inverting the action

    // set when refuted
    Refutation reason = Refutation::Unsupported;
    bool definitive = false;  // bound-independent refutation
    std::string detail;

    // the weight column of the matched model
    IntVec weights() const;
};

struct StratumResult {
    geom::Stratum stratum;
    MatchResult result;
};

struct SmoothnessCertificate {
    std::vector<StratumResult> strata;
    Verdict verdict = Verdict::Inconclusive;
};

// Complexity 0: a toric affine variety is smooth iff its cone is unimodular.
bool check_toric(const convex::RationalCone& sigma);

// Complexity 1 over a smooth curve. Affine base: smooth iff for every
// coefficient (and the tail itself) the cone spanned in N_Q x Q by
// (0, tail) and (1, Delta_i) is unimodular. P^1 base with rank-1 N: global
// match against the downgraded presentations of linear Gm-actions on A^2;
// higher rank over P^1 is reported Inconclusive. Improper divisors raise
// NotPDivisorError.
Verdict check_complexity1(const pdiv::PolyhedralDivisor& d);

// One germ per stratum, listing only divisors with nontrivial coefficients.
std::vector<LocalModelData> extract_local_data(const pdiv::PolyhedralDivisor& d,
                                               const std::vector<geom::Stratum>& strata);

// Decides whether a germ is the local datum of a linear Gm-action on A^3,
// solving the case formulas exactly over both divisor orderings and both
// orientations of N. Families whose cokernel has index > 1 describe cyclic
// covers and are not accepted as targets. Refutations are values; the
// definitive ones (non-normal crossing, exceptional width > 1, integrality
// failures) do not depend on the search bound.
MatchResult match_local(const LocalModelData& data, const Int& search_bound = Int(1000));

// Full checker: stratify, extract, match, aggregate. Smooth iff every
// stratum matched; Singular iff some stratum is definitively refuted;
// Inconclusive otherwise. Requires rank-1 N and, on the blow-up base, a
// minimal divisor (MinimalityError).
SmoothnessCertificate check_gm_threefold(const pdiv::PolyhedralDivisor& d,
                                         const geom::IncidenceData& incidence,
                                         const Int& search_bound = Int(1000));

// Smoothness of the chart {x3 != 0} of P(a,b,c): the two fan rays spanning
// it form a lattice basis.
bool chart_smooth_wps(const Int& a, const Int& b, const Int& c);

// Validation helper: recomputes the matched model's coefficients at the
// germ's divisors and compares them to the input, exactly.
bool match_reproduces_germ(const MatchResult& m, const LocalModelData& data);

} // namespace tvar::smooth
