#pragma once
/* Monomial orders: degrevlex (default), lex, and a two-block elimination
 * order (degrevlex within each block, first `elim` variables dominant).
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "foliate/poly.hpp"

namespace foliate {

struct MonomialOrder {
    enum class Kind { Degrevlex, Lex, Block };

    Kind kind = Kind::Degrevlex;
    std::size_t elim = 0;  // Block only: size of the leading block

    static MonomialOrder degrevlex() { return {}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder block(std::size_t elim) { return {Kind::Block, elim}; }

    /* <0, 0, >0 as a is below, equal to, above b. */
    int cmp(const Expv& a, const Expv& b) const;
    bool less(const Expv& a, const Expv& b) const { return cmp(a, b) < 0; }

    std::string key() const;  // cache key, e.g. "drl", "lex", "blk4"
};

using Term = std::pair<Expv, mpq_class>;

/* Terms of p sorted descending under ord (leading term first). */
std::vector<Term> ordered_terms(const Poly& p, const MonomialOrder& ord);

/* Leading term under ord; polynomial must be nonzero. */
Term leading_term(const Poly& p, const MonomialOrder& ord);

}  // namespace foliate
