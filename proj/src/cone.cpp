#include "tvar/cone.hpp"

#include <algorithm>

#include "tvar/lattice.hpp"

namespace tvar::convex {

IntVec primitive(const IntVec& v) {
    Int g = 0;
    for (const Int& e : v) g = gcd(g, e);
    if (g == 0 || g == 1) return v;
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

bool is_zero_vec(const IntVec& v) {
    for (const Int& e : v)
        if (e != 0) return false;
    return true;
}

Rat dot(const IntVec& u, const RatVec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dot: rank mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += Rat(u[i]) * v[i];
    return acc;
}

Int dot(const IntVec& u, const IntVec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dot: rank mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

IntVec ray_through(const RatVec& v) {
    Int scale = 1;
    for (const Rat& q : v) scale = lcm(scale, den(q));
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = num(v[i]) * (scale / den(v[i]));
    return primitive(out);
}

namespace {

// Solves sum_i x_i * cols[i] = target exactly; returns nothing when the
// system is inconsistent or underdetermined on the chosen columns.
std::optional<RatVec> solve_columns(const std::vector<IntVec>& cols, const IntVec& target) {
    if (cols.empty()) return std::nullopt;
    std::size_t d = target.size();
    std::size_t k = cols.size();
    // augmented d x (k+1) rational matrix
    std::vector<RatVec> a(d, RatVec(k + 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = Rat(cols[j][i]);
        a[i][k] = Rat(target[i]);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_of_col(k, SIZE_MAX);
    for (std::size_t col = 0; col < k && row < d; ++col) {
        std::size_t p = row;
        while (p < d && a[p][col] == 0) ++p;
        if (p == d) continue;
        std::swap(a[p], a[row]);
        Rat inv = a[row][col];
        for (std::size_t j = col; j <= k; ++j) a[row][j] /= inv;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    // columns without pivots => underdetermined; caller enumerates
    // independent subsets so just reject
    for (std::size_t col = 0; col < k; ++col)
        if (pivot_of_col[col] == SIZE_MAX) return std::nullopt;
    // inconsistency check
    for (std::size_t i = row; i < d; ++i)
        if (a[i][k] != 0) return std::nullopt;
    RatVec x(k);
    for (std::size_t col = 0; col < k; ++col) x[col] = a[pivot_of_col[col]][k];
    return x;
}

bool all_nonneg(const RatVec& x) {
    for (const Rat& q : x)
        if (q < 0) return false;
    return true;
}

} // namespace

bool in_cone(const IntVec& v, const std::vector<IntVec>& gens, std::size_t rank) {
    if (is_zero_vec(v)) return true;
    if (gens.empty()) return false;
    std::size_t n = gens.size();
    std::size_t kmax = std::min(n, rank);
    // subsets of size 1..kmax
    std::vector<std::size_t> idx;
    auto rec = [&](auto&& self, std::size_t start, std::size_t want) -> bool {
        if (want == 0) {
            std::vector<IntVec> cols;
            for (std::size_t i : idx) cols.push_back(gens[i]);
            auto x = solve_columns(cols, v);
            return x && all_nonneg(*x);
        }
        for (std::size_t i = start; i + want <= n; ++i) {
            idx.push_back(i);
            if (self(self, i + 1, want - 1)) return true;
            idx.pop_back();
        }
        return false;
    };
    for (std::size_t k = 1; k <= kmax; ++k) {
        idx.clear();
        if (rec(rec, 0, k)) return true;
    }
    return false;
}

RationalCone::RationalCone(std::size_t rank, std::vector<IntVec> generators) : rank_(rank) {
    for (auto& g : generators) {
        if (g.size() != rank) throw std::invalid_argument("cone generator rank mismatch");
        if (is_zero_vec(g)) continue;
        IntVec p = primitive(g);
        if (std::find(gens_.begin(), gens_.end(), p) == gens_.end()) gens_.push_back(p);
    }
}

RationalCone RationalCone::ray(const IntVec& g) {
    return RationalCone(g.size(), {g});
}

bool RationalCone::contains(const IntVec& v) const {
    return in_cone(v, gens_, rank_);
}

bool RationalCone::contains(const RatVec& v) const {
    return in_cone(ray_through(v), gens_, rank_);
}

bool RationalCone::contains_line() const {
    for (const IntVec& g : gens_) {
        IntVec neg(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
        if (contains(neg)) return true;
    }
    return false;
}

std::vector<IntVec> RationalCone::extreme_rays() const {
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        std::vector<IntVec> others;
        for (std::size_t j = 0; j < gens_.size(); ++j)
            if (j != i) others.push_back(gens_[j]);
        if (!in_cone(gens_[i], others, rank_)) out.push_back(gens_[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RationalCone RationalCone::sum(const RationalCone& other) const {
    if (rank_ != other.rank_) throw std::invalid_argument("cone rank mismatch");
    std::vector<IntVec> gens = gens_;
    gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
    return RationalCone(rank_, gens);
}

bool RationalCone::operator==(const RationalCone& other) const {
    if (rank_ != other.rank_) return false;
    return extreme_rays() == other.extreme_rays();
}

bool is_smooth_cone(const RationalCone& sigma) {
    if (sigma.contains_line())
        throw std::domain_error("is_smooth_cone: cone is not strongly convex");
    std::vector<IntVec> rays = sigma.extreme_rays();
    if (rays.empty()) return true;  // the zero cone: the torus itself
    std::size_t d = sigma.ambient_rank();
    lat::IntMatrix m(d, rays.size());
    for (std::size_t j = 0; j < rays.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) m.at(i, j) = rays[j][i];
    lat::SmithResult snf = lat::smith_normal_form(m);
    std::size_t n = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (snf.S.at(i, i) != 0) ++rank;
    if (rank != rays.size()) return false;  // not simplicial
    for (std::size_t i = 0; i < rank; ++i)
        if (snf.S.at(i, i) != 1) return false;
    return true;
}

std::vector<IntVec> dual_cone_generators(const RationalCone& sigma) {
    std::size_t d = sigma.ambient_rank();
    if (d > 2)
        throw std::domain_error("dual_cone_generators: ambient rank > 2 unsupported");
    std::vector<IntVec> rays = sigma.extreme_rays();
    if (d == 1) {
        if (rays.empty()) return {{Int(1)}, {Int(-1)}};
        // strongly convex: a single ray
        return {{rays[0][0] > 0 ? Int(1) : Int(-1)}};
    }
    auto perp = [](const IntVec& v) { return IntVec{-v[1], v[0]}; };
    if (rays.empty())
        return {{Int(1), Int(0)}, {Int(-1), Int(0)}, {Int(0), Int(1)}, {Int(0), Int(-1)}};
    if (rays.size() == 1) {
        IntVec w = perp(rays[0]);
        IntVec nw{-w[0], -w[1]};
        return {w, nw, rays[0]};  // the closed half-plane <u, ray> >= 0
    }
    if (rays.size() == 2) {
        IntVec u1 = perp(rays[1]);
        if (dot(u1, rays[0]) < 0) u1 = IntVec{-u1[0], -u1[1]};
        IntVec u2 = perp(rays[0]);
        if (dot(u2, rays[1]) < 0) u2 = IntVec{-u2[0], -u2[1]};
        return {primitive(u1), primitive(u2)};
    }
    throw std::domain_error("dual_cone_generators: unexpected extreme ray count in rank 2");
}

} // namespace tvar::convex
