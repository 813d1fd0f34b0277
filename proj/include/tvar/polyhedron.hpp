#pragma once

// Sigma-polyhedra: convex polyhedra Delta = Pi + sigma in N_Q, stored in
// V-representation (vertex list plus tail cone). The tail cone is the
// recession cone and is uniquely determined by Delta.

#include <optional>
#include <vector>

#include "tvar/cone.hpp"
#include "tvar/rational.hpp"

namespace tvar::convex {

// min <u, v> over a polyhedron: a rational when bounded below, otherwise
// empty (the evaluation direction pairs negatively with a tail generator).
using SupportValue = std::optional<Rat>;

class SigmaPolyhedron {
public:
    // conv(points) + tail. Points are deduplicated and reduced to an
    // irredundant vertex list. The tail must be strongly convex.
    SigmaPolyhedron(std::vector<RatVec> points, RationalCone tail);

    static SigmaPolyhedron point(const RatVec& q);
    // rank-1 shorthands
    static SigmaPolyhedron singleton(const Rat& q);
    static SigmaPolyhedron interval(const Rat& lo, const Rat& hi);
    static SigmaPolyhedron halfline(const Rat& lo, int direction);  // +1 up, -1 down

    std::size_t ambient_rank() const { return tail_.ambient_rank(); }
    const std::vector<RatVec>& vertices() const { return vertices_; }
    const RationalCone& tail() const { return tail_; }

    SigmaPolyhedron minkowski_sum(const SigmaPolyhedron& other) const;
    // m-fold Minkowski sum (dilation by a positive integer)
    SigmaPolyhedron scaled(const Int& m) const;
    SigmaPolyhedron negated() const;

    SupportValue support_min(const IntVec& u) const;

    bool operator==(const SigmaPolyhedron& other) const;

private:
    std::vector<RatVec> vertices_;  // irredundant, sorted
    RationalCone tail_;
};

// The recession cone of Delta. Returns the stored tail, which the
// constructor keeps consistent with the vertex data.
RationalCone tail_cone(const SigmaPolyhedron& p);

// Recomputes the recession cone from a facet (H-) description derived from
// the vertex data; rank <= 2. Used to validate the stored tail.
RationalCone recompute_tail_from_facets(const SigmaPolyhedron& p);

// Canonical forms of rank-1 sigma-polyhedra: singleton {q}, interval
// [lo, hi] with lo < hi, or a half-line. The unit of comparison in the
// local-model matcher.
struct CanonicalR1 {
    enum class Kind { Point, Interval, HalfUp, HalfDown };
    Kind kind;
    Rat lo;  // set for Point, Interval, HalfUp
    Rat hi;  // set for Point, Interval, HalfDown

    Rat width() const { return kind == Kind::Interval ? Rat(hi - lo) : Rat(0); }
    CanonicalR1 negated() const;
    bool operator==(const CanonicalR1&) const = default;
};

CanonicalR1 canonical_r1(const SigmaPolyhedron& p);
SigmaPolyhedron from_canonical_r1(const CanonicalR1& c);

} // namespace tvar::convex
