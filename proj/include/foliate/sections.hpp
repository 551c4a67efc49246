#pragma once
/* Constant fractions on an affine scheme with a vector field: the constancy
 * test in a localization, extension of a constant fraction along derivatives
 * of its denominator, gluing certificates for fraction sections, and the
 * round-trip comparison between a basic open set and its flow saturation.
 *
 * "Vanishes on D(b)" is uniformly encoded as membership in the saturation
 * (relations : b^inf) -- exactly "zero in the localized coordinate ring" for
 * a reduced scheme, which the results here assume (caller-asserted; see
 * relations_look_reduced for a cheap partial check).
 */

#include "foliate/scheme.hpp"

namespace foliate {

struct FractionPatch {
    Poly num, den;
};

/* A section presented by fraction patches num_i / den_i on { D(den_i) }. */
struct FractionSection {
    AffineDiffScheme scheme;
    std::vector<FractionPatch> patches;
};

/* w restricts to zero on D(b): w in (relations : b^inf), exactly or up to
   radical. */
bool vanishes_on_basic_open(const AffineDiffScheme& X, const Poly& w, const Poly& b);
bool vanishes_on_basic_open_radical(const AffineDiffScheme& X, const Poly& w, const Poly& b);

/* Partial reducedness check: flags relation generators that are syntactic
   monomial powers or exact squares.  A clean result is necessary evidence,
   not proof. */
bool relations_look_reduced(const AffineDiffScheme& X);

/* (num/den)' = 0 in the localization at den, i.e.
   num' den - num den' in (relations : den^inf).
   Throws when D(den) is empty (den in the radical of the relations). */
bool is_constant_fraction(const AffineDiffScheme& X, const Poly& num, const Poly& den);

struct PairCheck {
    std::size_t i = 0, j = 0;
    bool compatible = false;
};

struct SectionCertificate {
    std::vector<PairCheck> pairs;   // every i < j
    bool all_compatible = true;
    std::vector<bool> patch_constant;  // filled when constancy was requested
    bool all_constant = true;
    std::string to_text() const;
};

/* Pairwise gluing: num_i den_j - num_j den_i vanishes (up to radical) on
   D(den_i den_j).  Optionally checks each patch for constancy; a patch with
   empty domain counts as vacuously constant. */
SectionCertificate validate_kovacic_section(const FractionSection& s,
                                            bool check_constancy = false);

struct ExtensionResult {
    FractionSection section;       // patches (num^{(n)}, den^{(n)}), empty domains dropped
    std::vector<unsigned> orders;  // derivative order n of each retained patch
    bool covers_u_delta = false;   // patch domains cover the flow saturation of D(den)
    ClosureResult closure;         // differential closure of <den> + relations
    SectionCertificate compatibility;
};

/* Extend a constant fraction from D(den) by differentiating numerator and
   denominator together, keeping the orders whose denominator has nonempty
   domain.  Throws if the input is not constant or a gluing check fails. */
ExtensionResult extend_constant(const AffineDiffScheme& X, const Poly& num, const Poly& den,
                                unsigned max_order);

struct RoundTripCheck {
    std::size_t entry = 0;
    bool constant_on_domain = false;   // constant where both b and den invert
    bool restriction_matches = false;  // each extended patch restricts back to the input
    bool extension_stable = false;     // re-extending from any patch gives the same section
    bool ok() const { return constant_on_domain && restriction_matches && extension_stable; }
};

struct ConstantsComparisonReport {
    Poly domain_gen;  // b, for U = D(b)
    std::vector<RoundTripCheck> entries;
    bool all_ok = true;
};

/* For each supplied constant fraction on U = D(b): extend, restrict back,
   and check both round-trip directions. */
ConstantsComparisonReport constants_comparison_report(const AffineDiffScheme& X, const Poly& b,
                                                      const std::vector<FractionPatch>& fractions,
                                                      unsigned max_order);

}  // namespace foliate
