#include "tvar/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "tvar/errors.hpp"

namespace tvar::poly {

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rat& c) {
    MultiPoly p(std::move(variables));
    p.add_term(std::vector<unsigned>(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index) {
    MultiPoly p(std::move(variables));
    std::vector<unsigned> e(p.vars_.size(), 0);
    e.at(index) = 1;
    p.add_term(e, Rat(1));
    return p;
}

void MultiPoly::add_term(const std::vector<unsigned>& exps, const Rat& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    MultiPoly out(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) {
            std::vector<unsigned> e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

MultiPoly MultiPoly::negated() const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly out = constant(vars_, Rat(1));
    for (unsigned i = 0; i < e; ++i) out = out * (*this);
    return out;
}

MultiPoly MultiPoly::derivative(std::size_t var_index) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0) continue;
        std::vector<unsigned> d = e;
        d[var_index] -= 1;
        out.add_term(d, c * Rat(e[var_index]));
    }
    return out;
}

Rat MultiPoly::eval_at(const RatVec& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("eval_at: point length does not match variable count");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = c < 0 ? Rat(-c) : c;
        bool printed = false;
        if (a != 1) {
            os << rat_to_string(a);
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << rat_to_string(a);
        first = false;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& vars;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("polynomial parse error at position " + std::to_string(pos) +
                         ": " + why);
    }

    MultiPoly parse_expr() {
        MultiPoly acc = eat('-') ? parse_term().negated() : parse_term();
        for (;;) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_power();
        for (;;) {
            skip_ws();
            if (eat('*'))
                acc = acc * parse_power();
            else
                break;
        }
        return acc;
    }

    MultiPoly parse_power() {
        MultiPoly base = parse_atom();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail("expected exponent");
            unsigned e = static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
            return base.pow(e);
        }
        return base;
    }

    MultiPoly parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        if (eat('(')) {
            MultiPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        char c = text[pos];
        if (isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                ++pos;
            return MultiPoly::constant(vars, parse_rational(text.substr(start, pos - start)));
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) return MultiPoly::variable(vars, i);
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& variables) {
    Parser p{text, variables};
    MultiPoly out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

std::size_t rational_matrix_rank(std::vector<RatVec> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        std::size_t p = row;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[row]);
        for (std::size_t i = row + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[row][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

JacobianResult jacobian_at(const std::vector<MultiPoly>& fs, const RatVec& point) {
    for (const auto& f : fs)
        if (f.eval_at(point) != 0)
            throw PointNotOnVarietyError("point is not on the variety: " + f.to_string() +
                                         " does not vanish");
    JacobianResult out;
    for (const auto& f : fs) {
        RatVec grad(point.size());
        for (std::size_t i = 0; i < point.size(); ++i)
            grad[i] = f.derivative(i).eval_at(point);
        out.matrix.push_back(std::move(grad));
    }
    out.rank = rational_matrix_rank(out.matrix);
    return out;
}

bool is_singular_point(const std::vector<MultiPoly>& fs, const RatVec& point) {
    JacobianResult j = jacobian_at(fs, point);
    return j.rank < fs.size();
}

} // namespace tvar::poly
