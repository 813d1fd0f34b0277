#include "doctest.h"

#include "tvar/document.hpp"
#include "tvar/errors.hpp"

using namespace tvar;
using namespace tvar::io;

namespace {

const char* kExample2 = R"(# worked fixture
base blowup
divisor D1 strict_transform point 1/2
divisor D2 strict_transform point -1/3
divisor E exceptional interval 0 1/6
origin_mult D1 1
origin_mult D2 1
stratum p-0-2 D1 D2 normal
stratum p-0-3 D1 D2 normal
)";

} // namespace

TEST_CASE("parsing the worked fixture") {
    PDivisorDocument doc = parse_document_string(kExample2);
    CHECK(doc.base.kind == geom::BaseKind::BlowupAffinePlaneAtOrigin);
    CHECK(doc.tail.is_zero_cone());
    CHECK(doc.divisors.size() == 3);
    CHECK(doc.coefficients.size() == 3);
    CHECK(doc.incidence.declared_strata.size() == 2);
    CHECK(doc.incidence.origin_multiplicity.at("D1") == 1);
    auto d = doc.build_divisor();
    CHECK(d.support().size() == 3);
}

TEST_CASE("print . parse is idempotent after one normalization pass") {
    std::string once = print_document(parse_document_string(kExample2));
    std::string twice = print_document(parse_document_string(once));
    CHECK(once == twice);

    const char* ray_doc = R"(base wps 2 3 6
tail 1
divisor D1 coordinate halfline -1/3
divisor D2 coordinate halfline 1/2
)";
    std::string a = print_document(parse_document_string(ray_doc));
    CHECK(a == print_document(parse_document_string(a)));
}

TEST_CASE("rejects malformed documents") {
    CHECK_THROWS_AS(parse_document_string("frobnicate 1\n"), ParseError);
    CHECK_THROWS_AS(parse_document_string("divisor D user point 1/2\n"), ParseError);  // no base
    CHECK_THROWS_AS(parse_document_string("base blowup\ndivisor D user point 0.5\n"),
                    ParseError);  // decimals are not rationals
    CHECK_THROWS_AS(parse_document_string("base blowup\ndivisor D user halfline 0\n"),
                    ParseError);  // halfline needs a tail ray
    CHECK_THROWS_AS(
        parse_document_string("base blowup\ntail 1\ndivisor D user point 0\n"),
        ParseError);  // point needs tail {0}
    CHECK_THROWS_AS(
        parse_document_string("base blowup\ndivisor D user point 1\nstratum s D X normal\n"),
        ParseError);  // undeclared divisor in a stratum
    CHECK_THROWS_AS(
        parse_document_string(
            "base blowup\ndivisor A user point 1\ndivisor B user point 1\nstratum s A B\n"),
        ParseError);  // two-divisor stratum without a crossing flag
    CHECK_THROWS_AS(parse_document_string("base blowup\ntail 1\ntail -1\n"), ParseError);
    CHECK_THROWS_AS(parse_document_string("base wps 2 3\n"), ParseError);
}

TEST_CASE("degenerate intervals normalize to points") {
    PDivisorDocument doc =
        parse_document_string("base blowup\ndivisor D user interval 1/2 1/2\n");
    CHECK(convex::canonical_r1(doc.coefficients.at("D")).kind ==
          convex::CanonicalR1::Kind::Point);
}
