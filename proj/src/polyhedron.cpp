#include "tvar/polyhedron.hpp"

#include <algorithm>

namespace tvar::convex {

namespace {

// v in conv(points) + cone(rays)? Lifted to the cone over height 1:
// (1, v) in cone{(1, p_i)} + cone{(0, r_j)}.
bool in_hull_with_tail(const RatVec& v, const std::vector<RatVec>& points,
                       const std::vector<IntVec>& rays) {
    if (points.empty()) return false;
    std::size_t d = v.size();
    Int scale = 1;
    for (const Rat& q : v) scale = lcm(scale, den(q));
    for (const auto& p : points)
        for (const Rat& q : p) scale = lcm(scale, den(q));
    auto lift = [&](const RatVec& p, const Int& height) {
        IntVec out(d + 1);
        out[0] = height * scale;
        for (std::size_t i = 0; i < d; ++i) {
            const Rat q = p[i] * scale;
            out[i + 1] = num(q);  // integral by choice of scale
        }
        return out;
    };
    IntVec target = lift(v, 1);
    std::vector<IntVec> gens;
    for (const auto& p : points) gens.push_back(lift(p, 1));
    for (const auto& r : rays) {
        IntVec g(d + 1);
        g[0] = 0;
        for (std::size_t i = 0; i < d; ++i) g[i + 1] = r[i];
        gens.push_back(g);
    }
    return in_cone(target, gens, d + 1);
}

std::vector<RatVec> irredundant_vertices(std::vector<RatVec> pts, const RationalCone& tail) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const auto& rays = tail.generators();
    std::vector<RatVec> keep;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<RatVec> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!in_hull_with_tail(pts[i], others, rays)) keep.push_back(pts[i]);
    }
    return keep;
}

} // namespace

SigmaPolyhedron::SigmaPolyhedron(std::vector<RatVec> points, RationalCone tail)
    : tail_(std::move(tail)) {
    if (points.empty()) throw std::invalid_argument("sigma-polyhedron needs a vertex");
    for (const auto& p : points)
        if (p.size() != tail_.ambient_rank())
            throw std::invalid_argument("sigma-polyhedron rank mismatch");
    if (tail_.contains_line())
        throw std::invalid_argument("tail cone is not strongly convex");
    vertices_ = irredundant_vertices(std::move(points), tail_);
}

SigmaPolyhedron SigmaPolyhedron::point(const RatVec& q) {
    return SigmaPolyhedron({q}, RationalCone::zero(q.size()));
}

SigmaPolyhedron SigmaPolyhedron::singleton(const Rat& q) {
    return point(RatVec{q});
}

SigmaPolyhedron SigmaPolyhedron::interval(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    return SigmaPolyhedron({RatVec{lo}, RatVec{hi}}, RationalCone::zero(1));
}

SigmaPolyhedron SigmaPolyhedron::halfline(const Rat& endpoint, int direction) {
    IntVec g{Int(direction >= 0 ? 1 : -1)};
    return SigmaPolyhedron({RatVec{endpoint}}, RationalCone::ray(g));
}

SigmaPolyhedron SigmaPolyhedron::minkowski_sum(const SigmaPolyhedron& other) const {
    if (ambient_rank() != other.ambient_rank())
        throw std::invalid_argument("minkowski_sum: rank mismatch");
    std::vector<RatVec> sums;
    for (const auto& a : vertices_)
        for (const auto& b : other.vertices_) {
            RatVec s(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            sums.push_back(std::move(s));
        }
    return SigmaPolyhedron(std::move(sums), tail_.sum(other.tail_));
}

SigmaPolyhedron SigmaPolyhedron::scaled(const Int& m) const {
    if (m < 1) throw std::invalid_argument("scaled: factor must be >= 1");
    std::vector<RatVec> pts;
    for (const auto& v : vertices_) {
        RatVec s(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] * Rat(m);
        pts.push_back(std::move(s));
    }
    return SigmaPolyhedron(std::move(pts), tail_);
}

SigmaPolyhedron SigmaPolyhedron::negated() const {
    std::vector<RatVec> pts;
    for (const auto& v : vertices_) {
        RatVec s(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) s[i] = -v[i];
        pts.push_back(std::move(s));
    }
    std::vector<IntVec> rays;
    for (const auto& g : tail_.generators()) {
        IntVec r(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) r[i] = -g[i];
        rays.push_back(std::move(r));
    }
    return SigmaPolyhedron(std::move(pts), RationalCone(ambient_rank(), rays));
}

SupportValue SigmaPolyhedron::support_min(const IntVec& u) const {
    if (u.size() != ambient_rank()) throw std::invalid_argument("support_min: rank mismatch");
    for (const IntVec& g : tail_.generators())
        if (dot(u, g) < 0) return std::nullopt;
    Rat best = dot(u, vertices_[0]);
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        Rat v = dot(u, vertices_[i]);
        if (v < best) best = v;
    }
    return best;
}

bool SigmaPolyhedron::operator==(const SigmaPolyhedron& other) const {
    return tail_ == other.tail_ && vertices_ == other.vertices_;
}

RationalCone tail_cone(const SigmaPolyhedron& p) { return p.tail(); }

RationalCone recompute_tail_from_facets(const SigmaPolyhedron& p) {
    std::size_t d = p.ambient_rank();
    if (d > 2)
        throw std::domain_error("recompute_tail_from_facets: rank > 2 unsupported");
    const auto& vs = p.vertices();
    const auto& rays = p.tail().generators();
    if (d == 1) {
        // facets are x >= lo and/or x <= hi
        bool up = false, down = false;
        for (const auto& g : rays) (g[0] > 0 ? up : down) = true;
        std::vector<IntVec> gens;
        if (up) gens.push_back({Int(1)});
        if (down) gens.push_back({Int(-1)});
        return RationalCone(1, gens);
    }
    auto perp = [](const IntVec& v) { return IntVec{-v[1], v[0]}; };
    std::vector<IntVec> candidates = {{Int(1), Int(0)}, {Int(-1), Int(0)},
                                      {Int(0), Int(1)}, {Int(0), Int(-1)}};
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            RatVec diff{vs[j][0] - vs[i][0], vs[j][1] - vs[i][1]};
            IntVec dir = ray_through(diff);
            candidates.push_back(perp(dir));
            IntVec n = perp(dir);
            candidates.push_back({-n[0], -n[1]});
        }
    for (const auto& r : rays) {
        IntVec n = perp(r);
        candidates.push_back(n);
        candidates.push_back({-n[0], -n[1]});
    }
    // valid inequalities: bounded below over the polyhedron
    std::vector<IntVec> normals;
    for (const auto& u : candidates) {
        bool ok = true;
        for (const auto& r : rays)
            if (dot(u, r) < 0) { ok = false; break; }
        if (ok) normals.push_back(u);
    }
    // recession cone = {x : <u, x> >= 0 for every valid normal}
    std::vector<IntVec> dirs;
    for (const auto& u : normals) {
        IntVec w = perp(u);
        for (const IntVec& cand : {w, IntVec{-w[0], -w[1]}}) {
            bool ok = true;
            for (const auto& n : normals)
                if (dot(n, cand) < 0) { ok = false; break; }
            if (ok) dirs.push_back(cand);
        }
    }
    return RationalCone(2, dirs);
}

CanonicalR1 CanonicalR1::negated() const {
    CanonicalR1 out;
    switch (kind) {
        case Kind::Point:
            out.kind = Kind::Point;
            out.lo = -lo;
            out.hi = out.lo;
            break;
        case Kind::Interval:
            out.kind = Kind::Interval;
            out.lo = -hi;
            out.hi = -lo;
            break;
        case Kind::HalfUp:
            out.kind = Kind::HalfDown;
            out.hi = -lo;
            out.lo = 0;
            break;
        case Kind::HalfDown:
            out.kind = Kind::HalfUp;
            out.lo = -hi;
            out.hi = 0;
            break;
    }
    return out;
}

CanonicalR1 canonical_r1(const SigmaPolyhedron& p) {
    if (p.ambient_rank() != 1)
        throw std::domain_error("canonical_r1: polyhedron is not rank 1");
    CanonicalR1 out;
    const auto& vs = p.vertices();
    const auto& rays = p.tail().generators();
    if (rays.empty()) {
        if (vs.size() == 1) {
            out.kind = CanonicalR1::Kind::Point;
            out.lo = out.hi = vs[0][0];
        } else {
            out.kind = CanonicalR1::Kind::Interval;
            out.lo = vs.front()[0];
            out.hi = vs.back()[0];
        }
    } else if (rays[0][0] > 0) {
        out.kind = CanonicalR1::Kind::HalfUp;
        out.lo = vs.front()[0];
        out.hi = 0;
    } else {
        out.kind = CanonicalR1::Kind::HalfDown;
        out.hi = vs.back()[0];
        out.lo = 0;
    }
    return out;
}

SigmaPolyhedron from_canonical_r1(const CanonicalR1& c) {
    switch (c.kind) {
        case CanonicalR1::Kind::Point: return SigmaPolyhedron::singleton(c.lo);
        case CanonicalR1::Kind::Interval: return SigmaPolyhedron::interval(c.lo, c.hi);
        case CanonicalR1::Kind::HalfUp: return SigmaPolyhedron::halfline(c.lo, +1);
        case CanonicalR1::Kind::HalfDown: return SigmaPolyhedron::halfline(c.hi, -1);
    }
    throw std::logic_error("unreachable");
}

} // namespace tvar::convex
