#pragma once
/* Ring signatures and coefficient arithmetic.
 *
 * A Ring names a polynomial coefficient context: the base field (rationals
 * when char_p == 0, otherwise the prime field of that characteristic) and an
 * ordered list of variable names.  Rings are immutable and shared by pointer;
 * two rings are interchangeable iff their signatures match.
 *
 * Coefficients are mpq_class everywhere.  Over a prime field the value is an
 * integer in [0, p); normalize() enforces both conventions.
 */

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "foliate/error.hpp"

namespace foliate {

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Ring {
    unsigned char_p = 0;  // 0 = rationals, else a prime
    std::vector<std::string> vars;

    std::size_t nvars() const { return vars.size(); }

    std::optional<std::size_t> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        return std::nullopt;
    }

    bool same_signature(const Ring& o) const {
        return char_p == o.char_p && vars == o.vars;
    }

    /* Coefficient arithmetic in the base field. */
    mpq_class normalize(mpq_class c) const;
    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    mpq_class inv(const mpq_class& a) const;
    /* n reduced into the field (identity over the rationals). */
    mpq_class from_int(long n) const;
};

/* Validates variable names (nonempty, unique) and primality of char_p. */
RingPtr make_ring(unsigned char_p, std::vector<std::string> vars);

void require_same_ring(const Ring& a, const Ring& b, const char* where);

}  // namespace foliate
