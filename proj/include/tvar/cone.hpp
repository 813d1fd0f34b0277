#pragma once

// Exact rational polyhedral cones in N_Q, given by integer generators.

#include <optional>
#include <vector>

#include "tvar/rational.hpp"

namespace tvar::convex {

// v / content(v); the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);

bool is_zero_vec(const IntVec& v);

Rat dot(const IntVec& u, const RatVec& v);
Int dot(const IntVec& u, const IntVec& v);

// Clears denominators: the primitive integer vector on the ray through v.
IntVec ray_through(const RatVec& v);

// Exact membership test: v in cone(gens)? Carathéodory over subsets of
// linearly independent generators; intended for the low ranks and short
// generator lists this library works with.
bool in_cone(const IntVec& v, const std::vector<IntVec>& gens, std::size_t rank);

class RationalCone {
public:
    RationalCone() : rank_(0) {}
    explicit RationalCone(std::size_t rank) : rank_(rank) {}  // the zero cone
    RationalCone(std::size_t rank, std::vector<IntVec> generators);

    static RationalCone zero(std::size_t rank) { return RationalCone(rank); }
    static RationalCone ray(const IntVec& g);

    std::size_t ambient_rank() const { return rank_; }
    const std::vector<IntVec>& generators() const { return gens_; }

    bool is_zero_cone() const { return gens_.empty(); }
    bool contains(const IntVec& v) const;
    bool contains(const RatVec& v) const;
    bool contains_line() const;
    bool is_strongly_convex() const { return !contains_line(); }

    // Generators that are not in the cone of the remaining ones, sorted.
    std::vector<IntVec> extreme_rays() const;

    // Minkowski sum of cones: the cone generated by both generator sets.
    RationalCone sum(const RationalCone& other) const;

    bool operator==(const RationalCone& other) const;

private:
    std::size_t rank_;
    std::vector<IntVec> gens_;  // primitive, deduplicated
};

// True iff the primitive generators of the (strongly convex) cone extend to
// a basis of the ambient lattice: the cone is simplicial and the Smith
// diagonal of its extreme-ray matrix is all ones. Throws std::domain_error
// on a cone containing a line.
bool is_smooth_cone(const RationalCone& sigma);

// Generating rays of the dual cone, implemented for ambient rank <= 2.
std::vector<IntVec> dual_cone_generators(const RationalCone& sigma);

} // namespace tvar::convex
