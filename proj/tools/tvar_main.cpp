// Command-line front end: downgrading of linear Gm-actions on A^3,
// smoothness certification from p-divisor documents, evaluation divisors and
// Jacobian point checks.
//
// Exit codes: 0 smooth/success, 1 singular, 2 parse or domain error,
// 3 inconclusive.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "tvar/document.hpp"
#include "tvar/downgrade.hpp"
#include "tvar/errors.hpp"
#include "tvar/multipoly.hpp"
#include "tvar/smooth.hpp"

namespace {

using namespace tvar;

std::string join_ints(const IntVec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += v[i].str();
    }
    return out;
}

std::string coeff_line(const convex::CanonicalR1& c) {
    using K = convex::CanonicalR1::Kind;
    switch (c.kind) {
        case K::Point: return "point " + rat_to_string(c.lo);
        case K::Interval: return "interval " + rat_to_string(c.lo) + " " + rat_to_string(c.hi);
        case K::HalfUp: return "halfline " + rat_to_string(c.lo) + " +inf";
        case K::HalfDown: return "halfline -inf " + rat_to_string(c.hi);
    }
    return "?";
}

void print_match(std::ostream& os, const smooth::MatchResult& r) {
    if (r.matched) {
        os << "matched case " << r.case_id << " weights=(" << join_ints(r.weights())
           << ") section=(" << join_ints(r.section) << ")";
        if (r.swapped) os << " divisors-swapped";
        if (r.orientation_flipped) os << " action-inverted";
    } else {
        os << "refuted " << smooth::refutation_name(r.reason)
           << (r.definitive ? " (definitive)" : " (bounded search)");
        if (!r.detail.empty()) os << ": " << r.detail;
    }
}

int cmd_downgrade(const std::vector<long long>& weights,
                  const std::vector<long long>& section_opt) {
    IntVec f{Int(weights[0]), Int(weights[1]), Int(weights[2])};
    std::optional<IntVec> section;
    if (!section_opt.empty())
        section = IntVec{Int(section_opt[0]), Int(section_opt[1]), Int(section_opt[2])};
    down::Presentation p = down::presentation_for(f, section);

    std::cout << "weights: " << join_ints(f) << "\n";
    std::cout << "case: " << p.wcase.case_id << "\n";
    std::cout << "normalized_weights: " << join_ints(p.wcase.normalized_f) << "\n";
    std::cout << "permutation: " << p.wcase.perm[0] << " " << p.wcase.perm[1] << " "
              << p.wcase.perm[2] << "\n";
    std::cout << "sign_flip: " << (p.wcase.sign_flip ? "true" : "false") << "\n";
    std::cout << "section: " << join_ints(p.weight_data.section) << "\n";
    std::cout << "base: " << p.divisor.base().describe() << "\n";
    std::cout << "tail: "
              << (p.divisor.tail().is_zero_cone() ? "{0}" : "[0,+inf)") << "\n";
    if (p.divisor.coefficients().empty()) std::cout << "divisor: 0\n";
    for (const auto& d : p.divisor.divisors()) {
        auto it = p.divisor.coefficients().find(d.id);
        if (it == p.divisor.coefficients().end()) continue;
        std::cout << "coefficient " << d.id << " " << coeff_line(convex::canonical_r1(it->second))
                  << "\n";
    }
    std::cout << "P: " << p.weight_data.p.to_string() << "\n";
    std::cout << "cover_order: " << p.weight_data.cover_order << "\n";
    if (p.describes_cyclic_cover)
        std::cout << "note: data describes a T-invariant cyclic cover of order "
                  << p.weight_data.cover_order << ", not affine space itself\n";
    if (p.divisor.base().kind == geom::BaseKind::BlowupAffinePlaneAtOrigin)
        std::cout << "minimal: "
                  << (pdiv::is_minimal_on_blowup(p.divisor, p.incidence) ? "true" : "false")
                  << "\n";
    return 0;
}

int cmd_smooth(const std::string& path, long long bound) {
    io::PDivisorDocument doc = io::parse_document_file(path);
    pdiv::PolyhedralDivisor d = doc.build_divisor();
    smooth::SmoothnessCertificate cert =
        smooth::check_gm_threefold(d, doc.incidence, Int(bound));
    for (const auto& sr : cert.strata) {
        std::cout << "stratum " << sr.stratum.id << ": ";
        print_match(std::cout, sr.result);
        std::cout << "\n";
    }
    std::cout << "verdict: " << smooth::verdict_name(cert.verdict) << "\n";
    switch (cert.verdict) {
        case smooth::Verdict::Smooth: return 0;
        case smooth::Verdict::Singular: return 1;
        case smooth::Verdict::Inconclusive: return 3;
    }
    return 2;
}

int cmd_eval(const std::string& path, long long u) {
    io::PDivisorDocument doc = io::parse_document_file(path);
    pdiv::PolyhedralDivisor d = doc.build_divisor();
    pdiv::WeilQDivisor w = pdiv::evaluate(d, {Int(u)});
    for (const auto& div : doc.divisors) {
        auto it = w.find(div.id);
        Rat val = it == w.end() ? Rat(0) : it->second;
        std::cout << div.id << ": " << rat_to_string(val) << "\n";
    }
    return 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int cmd_oracle(const std::vector<std::string>& polys, const std::string& point_csv,
               const std::string& vars_csv) {
    std::vector<std::string> vars = split(vars_csv, ',');
    std::vector<poly::MultiPoly> fs;
    for (const auto& text : polys) fs.push_back(poly::parse_poly(text, vars));
    std::vector<std::string> coords = split(point_csv, ',');
    if (coords.size() != vars.size())
        throw ParseError("point has " + std::to_string(coords.size()) + " coordinates for " +
                         std::to_string(vars.size()) + " variables");
    RatVec point;
    for (const auto& c : coords) point.push_back(parse_rational(c));

    poly::JacobianResult j = poly::jacobian_at(fs, point);
    for (std::size_t i = 0; i < j.matrix.size(); ++i) {
        std::cout << "gradient " << (i + 1) << ":";
        for (const auto& e : j.matrix[i]) std::cout << " " << rat_to_string(e);
        std::cout << "\n";
    }
    std::cout << "rank: " << j.rank << "\n";
    bool singular = j.rank < fs.size();
    std::cout << "verdict: " << (singular ? "singular-point" : "smooth-point") << "\n";
    return singular ? 1 : 0;
}

int cmd_match(const std::vector<std::string>& entry_specs, const std::string& crossing,
              const std::string& tail, bool origin, long long bound) {
    smooth::LocalModelData data;
    data.tail_dir = tail == "up" ? 1 : (tail == "down" ? -1 : 0);
    data.stratum.id = "cli";
    data.stratum.includes_exceptional_image = origin;
    for (const auto& spec : entry_specs) {
        auto parts = split(spec, ':');
        if (parts.size() < 3) throw ParseError("entry '" + spec + "': want flavor:kind:values");
        smooth::LocalEntry e;
        if (parts[0] == "ord") e.exceptional = false;
        else if (parts[0] == "exc") e.exceptional = true;
        else throw ParseError("entry '" + spec + "': flavor must be ord or exc");
        e.divisor_id = "entry" + std::to_string(data.entries.size() + 1);
        using K = convex::CanonicalR1::Kind;
        if (parts[1] == "point") {
            if (parts.size() != 3) throw ParseError("entry '" + spec + "': point takes one value");
            e.poly.kind = K::Point;
            e.poly.lo = e.poly.hi = parse_rational(parts[2]);
        } else if (parts[1] == "interval") {
            if (parts.size() != 4) throw ParseError("entry '" + spec + "': interval takes two values");
            e.poly.kind = K::Interval;
            e.poly.lo = parse_rational(parts[2]);
            e.poly.hi = parse_rational(parts[3]);
            if (e.poly.lo >= e.poly.hi)
                throw ParseError("entry '" + spec + "': interval needs l < r");
        } else if (parts[1] == "halfline") {
            if (parts.size() != 3)
                throw ParseError("entry '" + spec + "': halfline takes one value");
            if (data.tail_dir == 0)
                throw ParseError("halfline entries need --tail up or --tail down");
            e.poly.kind = data.tail_dir > 0 ? K::HalfUp : K::HalfDown;
            (data.tail_dir > 0 ? e.poly.lo : e.poly.hi) = parse_rational(parts[2]);
        } else {
            throw ParseError("entry '" + spec + "': kind must be point, interval or halfline");
        }
        if (e.exceptional) data.stratum.includes_exceptional_image = true;
        data.stratum.divisors_through.push_back(e.divisor_id);
        data.entries.push_back(std::move(e));
    }
    data.crossing = data.entries.size() >= 2
                        ? (crossing == "non_normal" ? geom::Crossing::NonNormal
                                                    : geom::Crossing::Normal)
                        : (data.entries.size() == 1 ? geom::Crossing::Single
                                                    : geom::Crossing::None);
    smooth::MatchResult r = smooth::match_local(data, Int(bound));
    print_match(std::cout, r);
    std::cout << "\n";
    std::cout << "verdict: "
              << (r.matched ? "matched" : (r.definitive ? "refuted" : "inconclusive")) << "\n";
    if (r.matched) return 0;
    return r.definitive ? 1 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus for torus-action combinatorics: downgrading, "
                 "polyhedral divisors and smoothness certification"};
    app.require_subcommand(1);

    auto* dg = app.add_subcommand("downgrade",
                                  "presentation of a linear Gm-action on A^3");
    std::vector<long long> weights, section;
    dg->add_option("weights", weights, "three integer weights")->expected(3)->required();
    dg->add_option("--section", section, "integer section with s*F = 1")->expected(3);

    auto* sm = app.add_subcommand("smooth", "smoothness certificate for a p-divisor document");
    std::string sm_path;
    long long sm_bound = 1000;
    sm->add_option("document", sm_path, "p-divisor document path")->required();
    sm->add_option("--bound", sm_bound, "Diophantine search bound (default 1000)");

    auto* ev = app.add_subcommand("eval", "evaluation divisor D(u)");
    std::string ev_path;
    long long ev_u = 0;
    ev->add_option("document", ev_path, "p-divisor document path")->required();
    ev->add_option("-u,--direction", ev_u, "integer evaluation direction")->required();

    auto* orc = app.add_subcommand("oracle", "exact polynomial point checks");
    auto* jac = orc->add_subcommand("jacobian", "Jacobian criterion at a point");
    std::vector<std::string> polys;
    std::string point_csv, vars_csv = "x,y,z,t";
    jac->add_option("--poly", polys, "polynomial (repeatable)")->required();
    jac->add_option("--point", point_csv, "comma-separated rational coordinates")->required();
    jac->add_option("--vars", vars_csv, "comma-separated variable names (default x,y,z,t)");
    orc->require_subcommand(1);

    auto* mt = app.add_subcommand("match", "match one local germ against the A^3 families");
    std::vector<std::string> entries;
    std::string mt_crossing = "normal", mt_tail = "zero";
    bool mt_origin = false;
    long long mt_bound = 1000;
    mt->add_option("entries", entries,
                   "entries like ord:point:1/2 exc:interval:0:1/6 ord:halfline:-1/3");
    mt->add_option("--crossing", mt_crossing, "normal|non_normal (default normal)")
        ->check(CLI::IsMember({"normal", "non_normal"}));
    mt->add_option("--tail", mt_tail, "zero|up|down (default zero)")
        ->check(CLI::IsMember({"zero", "up", "down"}));
    mt->add_flag("--origin", mt_origin, "treat the stratum as a blown-up origin");
    mt->add_option("--bound", mt_bound, "Diophantine search bound (default 1000)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dg->parsed()) return cmd_downgrade(weights, section);
        if (sm->parsed()) return cmd_smooth(sm_path, sm_bound);
        if (ev->parsed()) return cmd_eval(ev_path, ev_u);
        if (orc->parsed()) return cmd_oracle(polys, point_csv, vars_csv);
        if (mt->parsed()) return cmd_match(entries, mt_crossing, mt_tail, mt_origin, mt_bound);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
