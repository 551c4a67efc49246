#include "foliate/ring.hpp"

#include <set>

namespace foliate {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

mpq_class Ring::normalize(mpq_class c) const {
    c.canonicalize();
    if (char_p == 0) return c;
    if (c.get_den() != 1) {
        // a/b in GF(p): multiply by the inverse of the denominator
        mpq_class num(c.get_num());
        mpq_class den(c.get_den());
        return mul(normalize(num), inv(normalize(den)));
    }
    mpz_class r = c.get_num() % char_p;
    if (r < 0) r += char_p;
    return mpq_class(r);
}

mpq_class Ring::add(const mpq_class& a, const mpq_class& b) const {
    return normalize(a + b);
}

mpq_class Ring::sub(const mpq_class& a, const mpq_class& b) const {
    return normalize(a - b);
}

mpq_class Ring::mul(const mpq_class& a, const mpq_class& b) const {
    return normalize(a * b);
}

mpq_class Ring::neg(const mpq_class& a) const { return normalize(-a); }

mpq_class Ring::inv(const mpq_class& a) const {
    if (a == 0) throw Error("division by zero");
    if (char_p == 0) return 1 / mpq_class(a);
    mpz_class r;
    mpz_class n = a.get_num() % char_p;
    if (n < 0) n += char_p;
    if (mpz_invert(r.get_mpz_t(), n.get_mpz_t(), mpz_class(char_p).get_mpz_t()) == 0)
        throw Error("not invertible modulo " + std::to_string(char_p));
    return mpq_class(r);
}

mpq_class Ring::div(const mpq_class& a, const mpq_class& b) const {
    return mul(a, inv(b));
}

mpq_class Ring::from_int(long n) const { return normalize(mpq_class(n)); }

RingPtr make_ring(unsigned char_p, std::vector<std::string> vars) {
    if (char_p != 0 && !is_prime(char_p))
        throw Error("GF modulus " + std::to_string(char_p) + " is not prime");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw Error("empty variable name");
        if (!seen.insert(v).second) throw Error("duplicate variable name '" + v + "'");
    }
    auto r = std::make_shared<Ring>();
    r->char_p = char_p;
    r->vars = std::move(vars);
    return r;
}

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
    if (!a.same_signature(b))
        throw Error(std::string(where) + ": ring signatures differ");
}

}  // namespace foliate
