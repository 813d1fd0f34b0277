#pragma once

// Exact integer linear algebra: gcd helpers, Smith normal form, sections of
// weight columns and the cokernel matrices of the downgrading exact sequence
//
//     0 --> Z --F--> Z^3 --P--> Z^2 --> 0      with section s*F = 1.

#include <cstddef>
#include <vector>

#include "tvar/rational.hpp"

namespace tvar::lat {

// Dense row-major matrix over arbitrary-precision integers. Dimensions are
// fixed at construction.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix column(const IntVec& v);
    static IntMatrix row(const IntVec& v);
    static IntMatrix from_rows(const std::vector<IntVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& at(std::size_t r, std::size_t c) const;
    Int& at(std::size_t r, std::size_t c);

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;
    IntMatrix transposed() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += k * row j   /   col i += k * col j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& k);
    void add_col_multiple(std::size_t i, std::size_t j, const Int& k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    // Laplace expansion; intended for the small square matrices used here.
    Int determinant() const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    IntVec entries_;
};

// Extended euclid: returns g = gcd(a, b) >= 0 and x, y with a*x + b*y = g.
// For a, b != 0 the pair is the minimal one: |x| <= |b|/(2g), |y| <= |a|/(2g)
// up to the usual boundary cases.
Int xgcd(const Int& a, const Int& b, Int& x, Int& y);

// gcd(|i|, |j|); both arguments zero is a domain error.
Int rho(const Int& i, const Int& j);

// gcd(a/rho(a,c), b/rho(b,c)) for positive a, b, c.
Int delta(const Int& a, const Int& b, const Int& c);

struct SmithResult {
    IntMatrix U, S, V;  // U*M*V = S, U and V unimodular, S diagonal with
                        // d1 | d2 | ... and di >= 0
};

SmithResult smith_normal_form(const IntMatrix& m);

// Product of the nonzero Smith diagonal entries; equals the index of the
// image lattice when the matrix is surjective onto a finite-index subgroup.
Int smith_diagonal_product(const IntMatrix& m);

// Unimodular U (n x n) with U * f = (g, 0, ..., 0)^t, g = gcd of entries > 0.
// Built by folding the extended euclidean algorithm over the entries left to
// right; fully deterministic.
IntMatrix column_reduce_unimodular(const IntVec& f);

// Integer row s with s * F = 1 for a 3 x 1 (or n x 1) column F with coprime
// entries. Deterministic: the minimal-Bezout left fold of xgcd over the
// entries. Throws NoSectionError when gcd(entries) != 1.
IntVec section_of(const IntVec& f);

bool is_valid_section(const IntVec& s, const IntVec& f);

// The five sign patterns of weight columns on A^3. See downgrade.hpp for the
// normalization that produces them.
//   case 1: (a, b, -c)   case 2: (a, b, c)   case 3: (0, b, c)
//   case 4: (0, b, -c)   case 5: (0, 0, 1)      (a, b, c positive)
bool matches_case_pattern(const IntVec& f, int case_id);

struct CokernelResult {
    IntMatrix P;      // 2 x 3, P*F = 0
    Int cover_order;  // index [Z^2 : P(Z^3)], product of the Smith diagonal
};

// The standard cokernel matrix for each case of the classification of linear
// Gm-actions on A^3. F must match the sign pattern of case_id.
CokernelResult cokernel_matrix(const IntVec& f, int case_id);

// Weight matrix, section and cokernel of the downgrading exact sequence.
struct WeightData {
    IntVec f;        // normalized weight column, 3 entries
    IntVec section;  // s, s*F = 1
    IntMatrix p;     // 2 x 3 cokernel from the case table
    Int cover_order;

    bool consistent() const;  // s*F = 1 and P*F = 0
};

} // namespace tvar::lat
