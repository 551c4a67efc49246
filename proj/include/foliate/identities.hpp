#pragma once
/* Exact symbolic identities behind constant-fraction extension, verified by
 * expansion in a jet ring and shipped with replayable certificates.
 *
 * The recurring object is Theta = th * (a_1 b_0 - a_0 b_1): the obstruction
 * to a/b being constant, scaled by an annihilator th.  The cross terms
 *     E(N, i) = b_0^{N-1} th_0^N (b_i a_{N-i} - a_i b_{N-i})
 * compare the derivative patches a_i/b_i pairwise; each is certified to lie
 * in the ideal generated by Theta and its shifts, with explicit cofactors
 * built by the level recursion
 *     b th dE(N, i) = E(N+1, i+1) + E(N+1, i) + ((N-1) b_1 th + N b th_1) E(N, i)
 * anchored at E(1, 0) = Theta, the zero middle term of even levels, and a
 * bilinear-identity instance for the middle of odd levels.
 */

#include <optional>

#include "foliate/jetring.hpp"

namespace foliate {

/* target == sum_j cofactors[j] * generators[j], checked by replay(). */
struct CofactorCertificate {
    std::string name;
    RingPtr ring;
    Poly target;
    std::vector<Poly> generators;
    std::vector<Poly> cofactors;
    bool verified = false;  // replay() result at construction

    bool replay() const;
    std::string to_text() const;
};

/* The bilinear identity comparing two fractions A1/B1, A2/B2 with a common
 * annihilator t: with Theta = t (A1 B2 - B1 A2),
 *     t B1 B2 Theta' - t B1 B2' Theta - t B1' B2 Theta - t' B1 B2 Theta
 *       == t^2 (B2^2 (A1' B1 - A1 B1') - B1^2 (A2' B2 - A2 B2')),
 * so t^2 annihilates the mismatch of derivative numerators whenever t Theta
 * and t Theta' vanish.  Verified by full expansion of both sides. */
struct ExpandedIdentity {
    std::string name;
    RingPtr ring;
    Poly lhs, rhs;  // both fully expanded
    bool holds = false;
    std::string to_text() const;
};

ExpandedIdentity verify_fraction_pair_identity(unsigned jet_order = 2);

/* Certificates for all E(level, i), 0 <= i <= level, over the generators
   Theta, dTheta, ..., plus the exact level recurrence (as displayed above)
   for every lower level.  jet_order defaults to level + 2. */
struct CrossNumeratorReport {
    unsigned level = 0;
    unsigned jet_order = 0;
    std::vector<CofactorCertificate> certificates;  // index i
    bool recurrence_ok = false;
    bool all_verified = false;
};

CrossNumeratorReport verify_patch_cross_numerators(unsigned level,
                                                   std::optional<unsigned> jet_order = std::nullopt);

/* th f == 0 propagates to th^{(n)} f^{n+1} == 0: each power is certified in
   the ideal generated by th f and its shifts, via the recursion
   f d(th^{(n)} f^{n+1}) = th^{(n+1)} f^{n+2} + (n+1) f_1 th^{(n)} f^{n+1}. */
struct AnnihilatorPowersReport {
    unsigned max_n = 0;
    std::vector<CofactorCertificate> certificates;  // index n
    bool all_verified = false;
};

AnnihilatorPowersReport verify_annihilator_powers(unsigned max_n,
                                                  std::optional<unsigned> jet_order = std::nullopt);

}  // namespace foliate
