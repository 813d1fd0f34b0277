#include "tvar/document.hpp"

#include <fstream>
#include <sstream>

#include "tvar/errors.hpp"

namespace tvar::io {

using convex::RationalCone;
using convex::SigmaPolyhedron;

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;  // comment to end of line
        out.push_back(tok);
    }
    return out;
}

geom::DivisorFlavor flavor_from(const std::string& s, int lineno) {
    if (s == "coordinate") return geom::DivisorFlavor::Coordinate;
    if (s == "exceptional") return geom::DivisorFlavor::Exceptional;
    if (s == "strict_transform") return geom::DivisorFlavor::StrictTransform;
    if (s == "user") return geom::DivisorFlavor::User;
    throw ParseError("line " + std::to_string(lineno) + ": unknown divisor flavor '" + s + "'");
}

std::string flavor_name(geom::DivisorFlavor f) {
    switch (f) {
        case geom::DivisorFlavor::Coordinate: return "coordinate";
        case geom::DivisorFlavor::Exceptional: return "exceptional";
        case geom::DivisorFlavor::StrictTransform: return "strict_transform";
        case geom::DivisorFlavor::User: return "user";
    }
    return "?";
}

} // namespace

PDivisorDocument parse_document(std::istream& in) {
    PDivisorDocument doc;
    bool saw_base = false;
    std::optional<int> tail_dir;
    struct PendingCoeff {
        std::string kind;
        Rat a, b;
        int lineno;
    };
    std::map<std::string, PendingCoeff> pending;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        auto want = [&](std::size_t n) {
            if (toks.size() != n)
                throw ParseError("line " + std::to_string(lineno) + ": '" + key +
                                 "' expects " + std::to_string(n - 1) + " arguments");
        };
        if (key == "base") {
            if (saw_base) throw ParseError("line " + std::to_string(lineno) + ": duplicate base");
            saw_base = true;
            if (toks.size() >= 2 && toks[1] == "wps") {
                want(5);
                doc.base = geom::BaseVariety::wps(Int(toks[2]), Int(toks[3]), Int(toks[4]));
            } else {
                want(2);
                const std::string& k = toks[1];
                if (k == "affine_plane") doc.base = geom::BaseVariety::affine_plane();
                else if (k == "blowup") doc.base = geom::BaseVariety::blowup();
                else if (k == "p1xa1") doc.base = geom::BaseVariety::p1xa1();
                else if (k == "affine_line") doc.base = geom::BaseVariety::affine_line();
                else if (k == "projective_line") doc.base = geom::BaseVariety::projective_line();
                else if (k == "user_surface") doc.base = geom::BaseVariety::user_surface();
                else throw ParseError("line " + std::to_string(lineno) + ": unknown base '" + k + "'");
            }
        } else if (key == "tail") {
            want(2);
            Int g(toks[1]);
            if (g == 0)
                throw ParseError("line " + std::to_string(lineno) + ": zero tail generator");
            int dir = g > 0 ? 1 : -1;
            if (tail_dir && *tail_dir != dir)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": opposite tail generators make the tail a line");
            tail_dir = dir;
        } else if (key == "divisor") {
            if (toks.size() < 5)
                throw ParseError("line " + std::to_string(lineno) + ": divisor needs id, "
                                 "flavor, coefficient kind and values");
            const std::string& id = toks[1];
            for (const auto& d : doc.divisors)
                if (d.id == id)
                    throw ParseError("line " + std::to_string(lineno) + ": duplicate divisor '" +
                                     id + "'");
            geom::PrimeDivisor d{id, flavor_from(toks[2], lineno), ""};
            PendingCoeff pc;
            pc.kind = toks[3];
            pc.lineno = lineno;
            if (pc.kind == "point" || pc.kind == "halfline") {
                want(5);
                pc.a = parse_rational(toks[4]);
            } else if (pc.kind == "interval") {
                want(6);
                pc.a = parse_rational(toks[4]);
                pc.b = parse_rational(toks[5]);
            } else {
                throw ParseError("line " + std::to_string(lineno) + ": unknown coefficient kind '" +
                                 pc.kind + "'");
            }
            doc.divisors.push_back(std::move(d));
            pending.emplace(id, std::move(pc));
        } else if (key == "stratum") {
            if (toks.size() < 2)
                throw ParseError("line " + std::to_string(lineno) + ": stratum needs an id");
            geom::Stratum s;
            s.id = toks[1];
            std::size_t end = toks.size();
            s.crossing = geom::Crossing::None;
            bool has_flag = false;
            if (end > 2 && (toks[end - 1] == "normal" || toks[end - 1] == "non_normal")) {
                s.crossing = toks[end - 1] == "normal" ? geom::Crossing::Normal
                                                       : geom::Crossing::NonNormal;
                has_flag = true;
                --end;
            }
            for (std::size_t i = 2; i < end; ++i) s.divisors_through.push_back(toks[i]);
            if (s.divisors_through.size() >= 2 && !has_flag)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": a multi-divisor stratum needs normal|non_normal");
            if (s.divisors_through.size() < 2 && has_flag)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": crossing flag requires at least two divisors");
            if (s.divisors_through.size() == 1) s.crossing = geom::Crossing::Single;
            doc.incidence.declared_strata.push_back(std::move(s));
        } else if (key == "origin_mult") {
            want(3);
            doc.incidence.origin_multiplicity[toks[1]] = Int(toks[2]);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!saw_base) throw ParseError("document has no base");

    int dir = tail_dir.value_or(0);
    doc.tail = dir == 0 ? RationalCone::zero(1) : RationalCone::ray({Int(dir)});

    for (const auto& [id, pc] : pending) {
        if (pc.kind == "point") {
            if (dir != 0)
                throw ParseError("line " + std::to_string(pc.lineno) +
                                 ": point coefficient requires tail {0}");
            doc.coefficients.emplace(id, SigmaPolyhedron::singleton(pc.a));
        } else if (pc.kind == "interval") {
            if (dir != 0)
                throw ParseError("line " + std::to_string(pc.lineno) +
                                 ": interval coefficient requires tail {0}");
            if (pc.a > pc.b)
                throw ParseError("line " + std::to_string(pc.lineno) + ": interval with l > r");
            if (pc.a == pc.b)
                doc.coefficients.emplace(id, SigmaPolyhedron::singleton(pc.a));
            else
                doc.coefficients.emplace(id, SigmaPolyhedron::interval(pc.a, pc.b));
        } else {
            if (dir == 0)
                throw ParseError("line " + std::to_string(pc.lineno) +
                                 ": halfline coefficient requires a tail ray");
            doc.coefficients.emplace(id, SigmaPolyhedron::halfline(pc.a, dir));
        }
    }

    for (const auto& s : doc.incidence.declared_strata)
        for (const auto& id : s.divisors_through) {
            bool known = false;
            for (const auto& d : doc.divisors) known = known || d.id == id;
            if (!known)
                throw ParseError("stratum '" + s.id + "' references undeclared divisor '" +
                                 id + "'");
        }
    for (const auto& [id, mult] : doc.incidence.origin_multiplicity) {
        bool known = false;
        for (const auto& d : doc.divisors) known = known || d.id == id;
        if (!known)
            throw ParseError("origin_mult references undeclared divisor '" + id + "'");
    }
    return doc;
}

PDivisorDocument parse_document_string(const std::string& text) {
    std::istringstream is(text);
    return parse_document(is);
}

PDivisorDocument parse_document_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    return parse_document(f);
}

pdiv::PolyhedralDivisor PDivisorDocument::build_divisor() const {
    return pdiv::PolyhedralDivisor(base, tail, divisors, coefficients);
}

std::string print_document(const PDivisorDocument& doc) {
    std::ostringstream os;
    os << "base ";
    switch (doc.base.kind) {
        case geom::BaseKind::AffinePlane: os << "affine_plane"; break;
        case geom::BaseKind::BlowupAffinePlaneAtOrigin: os << "blowup"; break;
        case geom::BaseKind::P1xA1: os << "p1xa1"; break;
        case geom::BaseKind::WeightedProjectivePlane:
            os << "wps " << doc.base.wps_a << " " << doc.base.wps_b << " " << doc.base.wps_c;
            break;
        case geom::BaseKind::AffineLine: os << "affine_line"; break;
        case geom::BaseKind::ProjectiveLine: os << "projective_line"; break;
        case geom::BaseKind::UserSurface: os << "user_surface"; break;
    }
    os << "\n";
    if (!doc.tail.is_zero_cone())
        os << "tail " << (doc.tail.generators()[0][0] > 0 ? "1" : "-1") << "\n";
    for (const auto& d : doc.divisors) {
        os << "divisor " << d.id << " " << flavor_name(d.flavor) << " ";
        auto it = doc.coefficients.find(d.id);
        if (it == doc.coefficients.end()) {
            // trivial coefficient: re-serialize as the neutral element
            if (doc.tail.is_zero_cone())
                os << "point 0";
            else
                os << "halfline 0";
            os << "\n";
            continue;
        }
        convex::CanonicalR1 c = convex::canonical_r1(it->second);
        switch (c.kind) {
            case convex::CanonicalR1::Kind::Point:
                os << "point " << rat_to_string(c.lo);
                break;
            case convex::CanonicalR1::Kind::Interval:
                os << "interval " << rat_to_string(c.lo) << " " << rat_to_string(c.hi);
                break;
            case convex::CanonicalR1::Kind::HalfUp:
                os << "halfline " << rat_to_string(c.lo);
                break;
            case convex::CanonicalR1::Kind::HalfDown:
                os << "halfline " << rat_to_string(c.hi);
                break;
        }
        os << "\n";
    }
    for (const auto& s : doc.incidence.declared_strata) {
        os << "stratum " << s.id;
        for (const auto& id : s.divisors_through) os << " " << id;
        if (s.divisors_through.size() >= 2)
            os << " " << (s.crossing == geom::Crossing::NonNormal ? "non_normal" : "normal");
        os << "\n";
    }
    for (const auto& [id, mult] : doc.incidence.origin_multiplicity)
        os << "origin_mult " << id << " " << mult << "\n";
    return os.str();
}

} // namespace tvar::io
