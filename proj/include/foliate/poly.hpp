#pragma once
/* Multivariate polynomials with exact coefficients.
 *
 * Terms live in a std::map keyed by dense exponent vectors, so a Poly is
 * canonical by construction: no zero coefficients, coefficients normalized
 * for the ring's field, fixed storage order.  Two polynomials over rings
 * with the same signature compare equal iff their term maps are equal.
 */

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foliate/ring.hpp"

namespace foliate {

using Expv = std::vector<unsigned>;  // one exponent per ring variable

inline unsigned total_degree(const Expv& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

class Poly {
public:
    using TermMap = std::map<Expv, mpq_class>;

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, TermMap terms);

    static Poly zero(const RingPtr& ring) { return Poly(ring); }
    static Poly constant(const RingPtr& ring, const mpq_class& c);
    static Poly variable(const RingPtr& ring, std::size_t v);
    static Poly monomial(const RingPtr& ring, Expv e, const mpq_class& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    /* Max total degree; -1 for the zero polynomial. */
    long degree() const;
    bool is_homogeneous() const;

    mpq_class coeff(const Expv& e) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    Poly scaled(const mpq_class& c) const;
    Poly pow(unsigned n) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /* Formal partial derivative in variable v. */
    Poly partial(std::size_t v) const;

    /* Substitute images[v] for variable v; images live in `target`.
       Every variable needs an image. */
    Poly substitute(const RingPtr& target, const std::vector<Poly>& images) const;

    /* Move to a ring with the same field: var v here becomes var_map[v] there.
       var_map[v] < 0 requires that v not occur. */
    Poly transport(const RingPtr& target, const std::vector<long>& var_map) const;

    /* Total-degree homogenization-style evaluation helper used by chart math:
       substitute num[v]/den for each variable and clear to degree `clear_to`
       powers of den (den is a polynomial).  Requires clear_to >= degree(). */
    Poly substitute_cleared(const RingPtr& target, const std::vector<Poly>& num,
                            const Poly& den, unsigned clear_to) const;

private:
    void insert_term(Expv e, mpq_class c);  // adds, normalizing and dropping zeros

    RingPtr ring_;
    TermMap terms_;
};

/* Deterministic ordering used when polynomial lists need a canonical sort:
   graded reverse-lexicographic comparison of the whole term list. */
bool poly_canonical_less(const Poly& a, const Poly& b);

}  // namespace foliate
