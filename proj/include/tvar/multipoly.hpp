#pragma once

// Exact multivariate polynomials over Q with formal differentiation and
// Jacobian point checks. Point checks only; no elimination theory.

#include <map>
#include <string>
#include <vector>

#include "tvar/rational.hpp"

namespace tvar::poly {

// Exponent vectors are parallel to the variable list; zero coefficients are
// never stored.
class MultiPoly {
public:
    explicit MultiPoly(std::vector<std::string> variables);

    static MultiPoly constant(std::vector<std::string> variables, const Rat& c);
    static MultiPoly variable(std::vector<std::string> variables, std::size_t index);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<std::vector<unsigned>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly negated() const;
    MultiPoly pow(unsigned e) const;

    MultiPoly derivative(std::size_t var_index) const;

    Rat eval_at(const RatVec& point) const;

    std::string to_string() const;

private:
    void add_term(const std::vector<unsigned>& exps, const Rat& coeff);
    std::vector<std::string> vars_;
    std::map<std::vector<unsigned>, Rat> terms_;
};

// Parses "x^3 + y*(1 - y*z)^2 - t^2" over the given variables. Accepts
// + - * ^ and parentheses; juxtaposition is not implicit multiplication.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& variables);

struct JacobianResult {
    std::vector<RatVec> matrix;  // one gradient row per polynomial
    std::size_t rank = 0;
};

// Exact Jacobian at a point of the common zero locus; throws
// PointNotOnVarietyError when some polynomial does not vanish there.
JacobianResult jacobian_at(const std::vector<MultiPoly>& fs, const RatVec& point);

// rank < number of equations (complete-intersection fixtures only)
bool is_singular_point(const std::vector<MultiPoly>& fs, const RatVec& point);

std::size_t rational_matrix_rank(std::vector<RatVec> rows);

} // namespace tvar::poly
