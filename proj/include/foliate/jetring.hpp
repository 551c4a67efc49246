#pragma once
/* Free differential polynomial context, truncated at a fixed order.
 *
 * A JetRing over symbols s1..sk of order M is the polynomial ring on the
 * variables s_i for each symbol s and 0 <= i <= M, together with the shift
 * derivation s_i -> s_{i+1}.  The shift is total on polynomials that avoid
 * the top order M; applying it to one that does not is an error rather than
 * a silent truncation.
 */

#include "foliate/poly.hpp"

namespace foliate {

struct JetRing {
    RingPtr ring;
    std::vector<std::string> symbols;
    unsigned order = 0;  // highest derivative index carried

    std::size_t nsym() const { return symbols.size(); }
    std::size_t var_index(std::size_t sym, unsigned ord) const {
        return sym * (order + 1) + ord;
    }
    /* The variable s_i as a polynomial; bounds-checked. */
    Poly at(std::size_t sym, unsigned ord) const;
};

/* Variables are named "<symbol>_<i>". */
JetRing make_jet_ring(std::vector<std::string> symbols, unsigned order,
                      unsigned char_p = 0);

/* The shift derivation.  Throws if f involves a top-order variable. */
Poly jet_shift(const JetRing& jr, const Poly& f);
Poly jet_shift_iter(const JetRing& jr, const Poly& f, unsigned n);

}  // namespace foliate
