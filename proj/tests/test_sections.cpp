#include <vector>

#include "doctest.h"
#include "foliate/derivation.hpp"
#include "foliate/error.hpp"
#include "foliate/groebner.hpp"
#include "foliate/poly.hpp"
#include "foliate/ring.hpp"
#include "foliate/scheme.hpp"
#include "foliate/sections.hpp"

using namespace foliate;

namespace {

struct Plane {
    RingPtr R = make_ring(0, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
};

}  // namespace

TEST_CASE("vanishing on a basic open is saturation membership") {
    Plane P;
    AffineDiffScheme free = make_affine(P.R, {}, make_derivation(P.R, {P.x, P.y}));
    CHECK_FALSE(vanishes_on_basic_open(free, P.x * P.y, P.x));
    CHECK(vanishes_on_basic_open(free, Poly::zero(P.R), P.x));

    AffineDiffScheme curve = make_affine(P.R, {P.x * P.y}, make_derivation(P.R, {P.x, -P.y}));
    CHECK(vanishes_on_basic_open(curve, P.y, P.x));  // on D(x), xy = 0 forces y = 0
    CHECK_FALSE(vanishes_on_basic_open(curve, P.x, P.x));
    CHECK(vanishes_on_basic_open_radical(curve, P.y, P.x));
}

TEST_CASE("reducedness screen flags square generators") {
    Plane P;
    Derivation d = make_derivation(P.R, {P.x, P.y});
    CHECK(relations_look_reduced(make_affine(P.R, {P.y}, d)));
    CHECK(relations_look_reduced(make_affine(P.R, {}, d)));
    CHECK_FALSE(relations_look_reduced(make_affine(P.R, {P.x.pow(2)}, d)));
    CHECK_FALSE(relations_look_reduced(make_affine(P.R, {(P.x - P.y).pow(2)},
                                                   make_derivation(P.R, {P.x, P.y}))));
    // an irreducible quadric is fine
    CHECK(relations_look_reduced(
        make_affine(P.R, {P.x.pow(2) + P.y.pow(2) - Poly::constant(P.R, 1)},
                    make_derivation(P.R, {-P.y, P.x}))));
}

TEST_CASE("constancy of fractions") {
    Plane P;
    // radial flow: x/y is a first integral away from y = 0
    AffineDiffScheme radial = make_affine(P.R, {}, make_derivation(P.R, {P.x, P.y}));
    CHECK(is_constant_fraction(radial, P.x, P.y));
    CHECK(is_constant_fraction(radial, P.x.pow(2), P.x * P.y));
    CHECK_FALSE(is_constant_fraction(radial, P.x + Poly::constant(P.R, 1), P.y));

    // translation flow: x/y moves
    AffineDiffScheme shift =
        make_affine(P.R, {}, make_derivation(P.R, {Poly::constant(P.R, 1), Poly::zero(P.R)}));
    CHECK_FALSE(is_constant_fraction(shift, P.x, P.y));
    CHECK(is_constant_fraction(shift, P.y, Poly::constant(P.R, 1)));

    // the conserved quantity of the planar cubic flow
    Derivation d = make_derivation(P.R, {P.y.scaled(-2), P.x.pow(2).scaled(3)});
    AffineDiffScheme cubic = make_affine(P.R, {}, d);
    CHECK(is_constant_fraction(cubic, P.x.pow(3) + P.y.pow(2), Poly::constant(P.R, 1)));
    CHECK_FALSE(is_constant_fraction(cubic, P.x, Poly::constant(P.R, 1)));

    // empty domain: denominator nilpotent on the scheme
    RingPtr R1 = make_ring(0, {"x"});
    Poly x1 = Poly::variable(R1, 0);
    AffineDiffScheme fat = make_affine(R1, {x1.pow(2)}, make_derivation(R1, {x1}));
    CHECK_THROWS_AS(is_constant_fraction(fat, Poly::constant(R1, 1), x1), Error);
}

TEST_CASE("patch compatibility up to radical") {
    Plane P;
    AffineDiffScheme radial = make_affine(P.R, {}, make_derivation(P.R, {P.x, P.y}));

    // x/y and x^2/(xy) glue: x * xy - x^2 * y = 0
    FractionSection good{radial, {{P.x, P.y}, {P.x.pow(2), P.x * P.y}}};
    SectionCertificate cert = validate_kovacic_section(good, true);
    CHECK(cert.all_compatible);
    CHECK(cert.all_constant);
    REQUIRE(cert.pairs.size() == 1);
    CHECK(cert.pairs[0].compatible);

    // x/1 and 1/1 do not glue anywhere dense
    FractionSection bad{radial, {{P.x, Poly::constant(P.R, 1)},
                                 {Poly::constant(P.R, 1), Poly::constant(P.R, 1)}}};
    cert = validate_kovacic_section(bad);
    CHECK_FALSE(cert.all_compatible);

    // constancy flags are per patch
    FractionSection mixed{radial, {{P.x, P.y}}};
    cert = validate_kovacic_section(mixed, true);
    CHECK(cert.patch_constant == std::vector<bool>{true});
}

TEST_CASE("extension of x/x along the translation flow") {
    RingPtr R = make_ring(0, {"x"});
    Poly x = Poly::variable(R, 0);
    AffineDiffScheme line = make_affine(R, {}, make_derivation(R, {Poly::constant(R, 1)}));

    ExtensionResult ext = extend_constant(line, x, x, 3);
    REQUIRE(ext.section.patches.size() == 2);
    CHECK(ext.orders == std::vector<unsigned>{0, 1});
    CHECK(ext.section.patches[0].num == x);
    CHECK(ext.section.patches[0].den == x);
    CHECK(ext.section.patches[1].num == Poly::constant(R, 1));
    CHECK(ext.section.patches[1].den == Poly::constant(R, 1));
    CHECK(ext.covers_u_delta);  // D(x)^delta is the whole line
    CHECK(ext.compatibility.all_compatible);

    // a non-constant fraction is rejected up front
    CHECK_THROWS_AS(extend_constant(line, x, Poly::constant(R, 1), 2), Error);
}

TEST_CASE("extension of the radial first integral") {
    Plane P;
    AffineDiffScheme radial = make_affine(P.R, {}, make_derivation(P.R, {P.x, P.y}));
    ExtensionResult ext = extend_constant(radial, P.x, P.y, 2);
    REQUIRE(ext.section.patches.size() == 3);  // derivatives stay (x, y) at every order
    for (const auto& patch : ext.section.patches) {
        CHECK(patch.num == P.x);
        CHECK(patch.den == P.y);
    }
    CHECK(ext.covers_u_delta);  // D(y) is already invariant
    CHECK(ext.compatibility.all_compatible);
}

TEST_CASE("round-trip comparison over a basic open") {
    Plane P;
    AffineDiffScheme radial = make_affine(P.R, {}, make_derivation(P.R, {P.x, P.y}));
    std::vector<FractionPatch> fracs = {
        {P.x, P.y},
        {P.x.pow(2), P.y.pow(2)},
        {P.x * P.y, P.y.pow(2)},
    };
    ConstantsComparisonReport rep = constants_comparison_report(radial, P.y, fracs, 3);
    CHECK(rep.all_ok);
    REQUIRE(rep.entries.size() == 3);
    for (const auto& e : rep.entries) {
        CHECK(e.constant_on_domain);
        CHECK(e.restriction_matches);
        CHECK(e.extension_stable);
        CHECK(e.ok());
    }

    // a non-constant entry is reported, not thrown
    ConstantsComparisonReport bad =
        constants_comparison_report(radial, P.y, {{P.x + Poly::constant(P.R, 1), P.y}}, 3);
    CHECK_FALSE(bad.all_ok);
    CHECK_FALSE(bad.entries[0].constant_on_domain);
}
