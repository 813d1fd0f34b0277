#pragma once

// Line-oriented text format for rank-1 polyhedral divisors with strata and
// origin multiplicities. Exact rationals only ("p/q"); unknown keys are
// rejected. Grammar in the README.

#include <iosfwd>
#include <string>

#include "tvar/pdivisor.hpp"

namespace tvar::io {

struct PDivisorDocument {
    geom::BaseVariety base;
    convex::RationalCone tail = convex::RationalCone::zero(1);
    std::vector<geom::PrimeDivisor> divisors;
    std::map<std::string, convex::SigmaPolyhedron> coefficients;
    geom::IncidenceData incidence;

    pdiv::PolyhedralDivisor build_divisor() const;
};

PDivisorDocument parse_document(std::istream& in);
PDivisorDocument parse_document_string(const std::string& text);
PDivisorDocument parse_document_file(const std::string& path);

// Canonical re-serialization; parse . print is idempotent after one pass.
std::string print_document(const PDivisorDocument& doc);

} // namespace tvar::io
