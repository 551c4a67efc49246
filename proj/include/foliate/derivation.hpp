#pragma once
/* Derivations and higher (Hasse-Schmidt style) derivation families.
 *
 * A Derivation is determined by the images of the ring variables and extends
 * by the Leibniz rule.  It may carry quotient relations; whether it descends
 * to the quotient is checked where ideal membership is available (see
 * diffideal.hpp), keeping this layer free of Groebner machinery.
 *
 * A HigherDerivation is a truncated family D_0..D_M with D_0 = id, additive,
 * satisfying the generalized Leibniz rule
 *     D_i(fg) = sum_{k+l=i} D_k(f) D_l(g),
 * determined by the images D_i(x_v).  The rule itself holds by construction
 * of hs_apply; the iterativity axiom D_i D_j = C(i+j,i) D_{i+j} is a real
 * constraint checked by hs_check_iterativity.
 */

#include <vector>

#include "foliate/poly.hpp"

namespace foliate {

struct Derivation {
    RingPtr ring;
    std::vector<Poly> images;     // images[v] = image of variable v
    std::vector<Poly> relations;  // optional quotient relations; empty = free ring
};

Derivation make_derivation(RingPtr ring, std::vector<Poly> images,
                           std::vector<Poly> relations = {});

Poly apply_derivation(const Derivation& d, const Poly& f);
Poly apply_derivation_iter(const Derivation& d, const Poly& f, unsigned n);

struct HigherDerivation {
    RingPtr ring;
    unsigned order = 0;              // M
    std::vector<std::vector<Poly>> images;  // images[i-1][v] = D_i(x_v), 1 <= i <= M
};

HigherDerivation make_higher_derivation(RingPtr ring, unsigned order,
                                        std::vector<std::vector<Poly>> images);

/* D_i = d^i / i! — requires a rational coefficient field. */
HigherDerivation hs_from_derivation(const Derivation& d, unsigned order);

/* Apply D_i through the generalized Leibniz rule (i = 0 is the identity). */
Poly hs_apply(const HigherDerivation& hs, unsigned i, const Poly& f);

/* D_i(fg) == sum_{k+l=i} D_k(f) D_l(g), both sides computed independently. */
bool hs_check_leibniz(const HigherDerivation& hs, const Poly& f, const Poly& g,
                      unsigned up_to);

/* D_i(D_j(x_v)) == C(i+j,i) D_{i+j}(x_v) on generators for i+j <= order. */
bool hs_check_iterativity(const HigherDerivation& hs);

mpq_class binomial(unsigned n, unsigned k);

}  // namespace foliate
