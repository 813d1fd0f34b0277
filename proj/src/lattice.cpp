#include "tvar/lattice.hpp"

#include <sstream>

namespace tvar::lat {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::column(const IntVec& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

IntMatrix IntMatrix::row(const IntVec& v) {
    IntMatrix m(1, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m.at(0, i) = v[i];
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

const Int& IntMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
    return entries_[r * cols_ + c];
}

Int& IntMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
    return entries_[r * cols_ + c];
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix dim mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const Int& e : entries_)
        if (e != 0) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& k) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) += k * at(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& k) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) += k * at(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ == 0) return 1;
    if (rows_ == 1) return at(0, 0);
    if (rows_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    Int det = 0;
    Int sign = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
        IntMatrix minor(rows_ - 1, cols_ - 1);
        for (std::size_t i = 1; i < rows_; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j == c) continue;
                minor.at(i - 1, jj++) = at(i, j);
            }
        }
        det += sign * at(0, c) * minor.determinant();
        sign = -sign;
    }
    return det;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (a == 0 && b == 0) {
        x = 0;
        y = 0;
        return 0;
    }
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    Int g = old_r;
    x = old_s;
    y = old_t;
    // Reduce to the minimal Bezout pair: shift x into (-|b|/2g, |b|/2g].
    if (b != 0 && a != 0) {
        Int m = iabs(b) / g;
        while (2 * x > m) x -= m;
        while (2 * x <= -m) x += m;
        y = (g - a * x) / b;
    }
    return g;
}

Int rho(const Int& i, const Int& j) {
    if (i == 0 && j == 0) throw std::domain_error("rho(0, 0) is undefined");
    return gcd(iabs(i), iabs(j));
}

Int delta(const Int& a, const Int& b, const Int& c) {
    if (a < 1 || b < 1 || c < 1) throw std::domain_error("delta requires positive arguments");
    return gcd(a / rho(a, c), b / rho(b, c));
}

namespace {

// Position of a nonzero entry with least absolute value in M[s.., s..].
bool find_pivot(const IntMatrix& m, std::size_t s, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = s; i < m.rows(); ++i)
        for (std::size_t j = s; j < m.cols(); ++j) {
            const Int& e = m.at(i, j);
            if (e == 0) continue;
            Int a = iabs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult res;
    res.S = m;
    res.U = IntMatrix::identity(m.rows());
    res.V = IntMatrix::identity(m.cols());
    IntMatrix& S = res.S;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;

    std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t s = 0; s < n; ++s) {
        std::size_t pr = s, pc = s;
        if (!find_pivot(S, s, pr, pc)) break;
        if (pr != s) {
            S.swap_rows(s, pr);
            U.swap_rows(s, pr);
        }
        if (pc != s) {
            S.swap_cols(s, pc);
            V.swap_cols(s, pc);
        }
        for (;;) {
            bool dirty = false;
            for (std::size_t i = s + 1; i < S.rows(); ++i) {
                if (S.at(i, s) == 0) continue;
                Int q = S.at(i, s) / S.at(s, s);
                S.add_row_multiple(i, s, -q);
                U.add_row_multiple(i, s, -q);
                if (S.at(i, s) != 0) {
                    S.swap_rows(s, i);
                    U.swap_rows(s, i);
                    dirty = true;
                }
            }
            for (std::size_t j = s + 1; j < S.cols(); ++j) {
                if (S.at(s, j) == 0) continue;
                Int q = S.at(s, j) / S.at(s, s);
                S.add_col_multiple(j, s, -q);
                V.add_col_multiple(j, s, -q);
                if (S.at(s, j) != 0) {
                    S.swap_cols(s, j);
                    V.swap_cols(s, j);
                    dirty = true;
                }
            }
            if (!dirty) break;
        }
        if (S.at(s, s) < 0) {
            S.negate_row(s);
            U.negate_row(s);
        }
        // Enforce the divisibility chain: if some later entry is not a
        // multiple of the pivot, fold it in and redo this step.
        bool redo = false;
        for (std::size_t i = s + 1; i < S.rows() && !redo; ++i)
            for (std::size_t j = s + 1; j < S.cols() && !redo; ++j) {
                if (S.at(i, j) % S.at(s, s) != 0) {
                    S.add_row_multiple(s, i, 1);
                    U.add_row_multiple(s, i, 1);
                    redo = true;
                }
            }
        if (redo) --s;
    }
    return res;
}

Int smith_diagonal_product(const IntMatrix& m) {
    SmithResult r = smith_normal_form(m);
    Int prod = 1;
    std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < n; ++i) {
        const Int& d = r.S.at(i, i);
        if (d != 0) prod *= d;
    }
    return prod;
}

IntMatrix column_reduce_unimodular(const IntVec& f) {
    std::size_t n = f.size();
    IntMatrix U = IntMatrix::identity(n);
    if (n == 0) return U;
    Int g = f[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (f[i] == 0 && g != 0) continue;
        Int x, y;
        Int g2 = xgcd(g, f[i], x, y);
        if (g2 == 0) continue;
        // Rows 0 and i of U are combined so that (U*f)[0] = g2, (U*f)[i] = 0.
        IntVec row0(n), rowi(n);
        for (std::size_t j = 0; j < n; ++j) {
            row0[j] = x * U.at(0, j) + y * U.at(i, j);
            rowi[j] = -(f[i] / g2) * U.at(0, j) + (g / g2) * U.at(i, j);
        }
        for (std::size_t j = 0; j < n; ++j) {
            U.at(0, j) = row0[j];
            U.at(i, j) = rowi[j];
        }
        g = g2;
    }
    if (g < 0) U.negate_row(0);
    return U;
}

IntVec section_of(const IntVec& f) {
    Int g = 0;
    for (const Int& e : f) g = gcd(g, e);
    if (g != 1)
        throw NoSectionError("weights have gcd " + g.str() +
                             "; the action is not faithful");
    IntMatrix U = column_reduce_unimodular(f);
    IntVec s(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) s[j] = U.at(0, j);
    return s;
}

bool is_valid_section(const IntVec& s, const IntVec& f) {
    if (s.size() != f.size()) return false;
    Int acc = 0;
    for (std::size_t i = 0; i < s.size(); ++i) acc += s[i] * f[i];
    return acc == 1;
}

bool matches_case_pattern(const IntVec& f, int case_id) {
    if (f.size() != 3) return false;
    switch (case_id) {
        case 1: return f[0] > 0 && f[1] > 0 && f[2] < 0;
        case 2: return f[0] > 0 && f[1] > 0 && f[2] > 0;
        case 3: return f[0] == 0 && f[1] > 0 && f[2] > 0;
        case 4: return f[0] == 0 && f[1] > 0 && f[2] < 0;
        case 5: return f[0] == 0 && f[1] == 0 && f[2] == 1;
        default: return false;
    }
}

CokernelResult cokernel_matrix(const IntVec& f, int case_id) {
    if (!matches_case_pattern(f, case_id))
        throw CaseMismatchError("weights " + IntMatrix::column(f).to_string() +
                                " do not match the sign pattern of case " +
                                std::to_string(case_id));
    CokernelResult out;
    auto mk = [&](std::initializer_list<Int> r0, std::initializer_list<Int> r1) {
        out.P = IntMatrix::from_rows({IntVec(r0), IntVec(r1)});
    };
    if (case_id == 1) {
        Int a = f[0], b = f[1], c = -f[2];
        Int ra = rho(a, c), rb = rho(b, c);
        mk({c / ra, 0, a / ra}, {0, c / rb, b / rb});
    } else if (case_id == 2) {
        Int a = f[0], b = f[1], c = f[2];
        Int ra = rho(a, c), rb = rho(b, c);
        mk({c / ra, 0, -(a / ra)}, {0, c / rb, -(b / rb)});
    } else if (case_id == 3) {
        Int b = f[1], c = f[2];
        Int rb = rho(b, c);
        mk({1, 0, 0}, {0, c / rb, -(b / rb)});
    } else if (case_id == 4) {
        Int b = f[1], c = -f[2];
        Int rb = rho(b, c);
        mk({1, 0, 0}, {0, c / rb, b / rb});
    } else {
        mk({1, 0, 0}, {0, 1, 0});
    }
    out.cover_order = smith_diagonal_product(out.P);
    return out;
}

bool WeightData::consistent() const {
    if (f.size() != 3 || section.size() != 3) return false;
    if (!is_valid_section(section, f)) return false;
    if (p.rows() != 2 || p.cols() != 3) return false;
    return (p * IntMatrix::column(f)).is_zero();
}

} // namespace tvar::lat
