#pragma once
/* Groebner bases and the ideal-theoretic operations built on them.
 *
 * The engine is classic Buchberger with the coprime and chain criteria and
 * the normal selection strategy, returning the reduced basis (monic, tails
 * reduced, sorted by leading monomial), which is canonical for the ideal
 * and order.  Options:
 *
 *   - degree_cap: S-pairs whose lcm exceeds the cap (total degree) are
 *     dropped.  For homogeneous input this yields a basis complete for
 *     membership of elements of degree <= cap; for general input it is a
 *     heuristic truncation and is never used by the library itself.
 *   - parallel: independent S-polynomials of one selection cohort are
 *     reduced concurrently (OpenMP) against a snapshot of the basis, then
 *     integrated serially in a fixed order.  Output is identical to the
 *     serial build because the reduced basis is canonical.
 *
 * The tracked variants carry cofactors over the original generators, so a
 * zero remainder comes with an exact certificate f = sum q_t * g_t.
 */

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "foliate/order.hpp"
#include "foliate/poly.hpp"

namespace foliate {

struct GOpts {
    std::optional<unsigned> degree_cap;
    bool parallel = true;
};

std::vector<Poly> buchberger(const RingPtr& ring, const std::vector<Poly>& gens,
                             const MonomialOrder& ord = {}, const GOpts& opts = {});

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& ord = {});

struct TrackedBasis {
    RingPtr ring;
    MonomialOrder ord;
    std::vector<Poly> basis;
    std::vector<std::vector<Poly>> cof;  // basis[k] = sum_t cof[k][t] * gens[t]
};

/* Serial only: tracking is about auditable certificates, not speed. */
TrackedBasis buchberger_tracked(const RingPtr& ring, const std::vector<Poly>& gens,
                                const MonomialOrder& ord = {}, const GOpts& opts = {});

struct TrackedNF {
    Poly remainder;
    std::vector<Poly> cof;  // f = sum_t cof[t] * gens[t] + remainder
};

TrackedNF normal_form_tracked(const Poly& f, const TrackedBasis& tb);

/* Immutable generator list with a lazily cached reduced Groebner basis per
   order.  Cheap to copy; safe to share across threads. */
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly> gens);

    const RingPtr& ring() const { return impl_->ring; }
    const std::vector<Poly>& gens() const { return impl_->gens; }
    const std::vector<Poly>& groebner_basis(const MonomialOrder& ord = {}) const;

    bool is_zero() const;  // no nonzero generators
    bool is_unit() const;  // contains 1

private:
    struct Impl {
        RingPtr ring;
        std::vector<Poly> gens;
        std::mutex mu;
        std::map<std::string, std::shared_ptr<const std::vector<Poly>>> cache;
    };
    std::shared_ptr<Impl> impl_;
};

bool ideal_member(const Poly& f, const Ideal& I);
bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

/* Intersection via a tag variable t: eliminate t from t*I + (1-t)*J. */
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/* Ideal of polynomials not involving the variables in `drop` (indices into
   the ring), returned over the ring of the remaining variables. */
Ideal elimination_ideal(const Ideal& I, const std::vector<std::size_t>& drop);

/* (I : f^inf) via elimination of y from I + <1 - y f>. */
Ideal saturation(const Ideal& I, const Poly& f);

/* f in radical(I), by the auxiliary-variable trick. */
bool radical_member(const Poly& f, const Ideal& I);

/* Mutual radical membership of generators. */
bool ideal_equal_radical(const Ideal& a, const Ideal& b);

/* Fresh variable name not clashing with the ring's variables. */
std::string fresh_var_name(const Ring& ring, const std::string& stem);

}  // namespace foliate
