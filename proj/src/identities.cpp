#include "foliate/identities.hpp"

#include <sstream>

#include "foliate/error.hpp"
#include "foliate/format.hpp"

namespace foliate {

namespace {

/* Cofactor vectors indexed by shift count of the generator family. */
using Cof = std::vector<Poly>;

Cof cof_sum(const RingPtr& ring, const Cof& x, const Cof& y, bool subtract) {
    Cof out(std::max(x.size(), y.size()), Poly(ring));
    for (std::size_t j = 0; j < x.size(); ++j) out[j] += x[j];
    for (std::size_t j = 0; j < y.size(); ++j) out[j] = subtract ? out[j] - y[j] : out[j] + y[j];
    return out;
}

Cof cof_scale(const Cof& x, const Poly& m) {
    Cof out;
    out.reserve(x.size());
    for (const auto& c : x) out.push_back(c * m);
    return out;
}

/* Certificate of the derivative: d(sum c_j G_j) = sum (dc_j) G_j + c_j G_{j+1}. */
Cof cof_shift(const JetRing& jr, const Cof& x) {
    Cof out(x.size() + 1, Poly(jr.ring));
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] += jet_shift(jr, x[j]);
        out[j + 1] += x[j];
    }
    return out;
}

/* Shifts of the generator, extended on demand. */
void ensure_shifts(const JetRing& jr, std::vector<Poly>& gens, std::size_t count) {
    while (gens.size() < count) gens.push_back(jet_shift(jr, gens.back()));
}

CofactorCertificate finish_certificate(std::string name, const JetRing& jr,
                                       std::vector<Poly>& gens, Poly target, Cof cof) {
    ensure_shifts(jr, gens, std::max<std::size_t>(cof.size(), 1));
    CofactorCertificate cert;
    cert.name = std::move(name);
    cert.ring = jr.ring;
    cert.target = std::move(target);
    cert.generators.assign(gens.begin(), gens.begin() + std::max<std::size_t>(cof.size(), 1));
    cert.cofactors = std::move(cof);
    cert.cofactors.resize(cert.generators.size(), Poly(jr.ring));
    cert.verified = cert.replay();
    return cert;
}

/* Jet context on symbols a, b, th with the obstruction generator Theta. */
struct Ctx {
    JetRing jr;
    std::vector<Poly> theta;  // theta[j] = j-th shift of Theta

    Poly a(unsigned i) const { return jr.at(0, i); }
    Poly b(unsigned i) const { return jr.at(1, i); }
    Poly th(unsigned i) const { return jr.at(2, i); }
};

Ctx make_ctx(unsigned order) {
    Ctx c{make_jet_ring({"a", "b", "th"}, order), {}};
    c.theta.push_back(c.th(0) * (c.a(1) * c.b(0) - c.a(0) * c.b(1)));
    return c;
}

Poly cross_term(const Ctx& c, unsigned n, unsigned i) {
    return c.b(0).pow(n - 1) * c.th(0).pow(n) *
           (c.b(i) * c.a(n - i) - c.a(i) * c.b(n - i));
}

/* (n-1) b_1 th_0 + n b_0 th_1: the correction factor of the level recurrence. */
Poly level_correction(const Ctx& c, unsigned n) {
    return c.b(1).scaled(n - 1) * c.th(0) + c.b(0).scaled(n) * c.th(1);
}

/* Middle certificate of an odd level 2k+1 from the bilinear identity
   instantiated at t = b^{k-1} th^k, A1/B1 = a_k/b_k, A2/B2 = a/b, whose
   Theta-slot carries E(k, 0). */
Cof odd_anchor(const Ctx& c, unsigned k, const Cof& ek0) {
    const RingPtr& ring = c.jr.ring;
    Poly t = c.b(0).pow(k - 1) * c.th(0).pow(k);
    Poly tp = jet_shift(c.jr, t);
    Poly B1 = c.b(k), B2 = c.b(0), B1p = c.b(k + 1), B2p = c.b(1);

    Cof lhs = cof_sum(ring, cof_scale(cof_shift(c.jr, ek0), t * B1 * B2),
                      cof_scale(ek0, t * B1 * B2p + t * B1p * B2 + tp * B1 * B2),
                      /*subtract=*/true);
    Cof out = cof_scale(lhs, c.th(0));
    if (out.empty()) out.emplace_back(ring);
    out[0] += c.b(0).pow(2 * k - 2) * c.b(k) * c.b(k) * c.th(0).pow(2 * k);
    return out;
}

/* Certificates for every E(n, i), n = 1..top, chained level by level. */
std::vector<std::vector<Cof>> build_levels(const Ctx& c, unsigned top) {
    std::vector<std::vector<Cof>> lv(top + 1);
    lv[1] = {Cof{Poly::constant(c.jr.ring, 1)}, Cof{Poly::constant(c.jr.ring, -1)}};
    for (unsigned n = 1; n < top; ++n) {
        unsigned m = n + 1;
        std::vector<Cof> cur(m + 1);
        unsigned k = m / 2;
        cur[k] = (m % 2 == 0) ? Cof{Poly(c.jr.ring)} : odd_anchor(c, k, lv[k][0]);

        Poly bth = c.b(0) * c.th(0);
        Poly corr = level_correction(c, n);
        for (unsigned i = k; i < m; ++i)
            cur[i + 1] = cof_sum(c.jr.ring,
                                 cof_sum(c.jr.ring, cof_scale(cof_shift(c.jr, lv[n][i]), bth),
                                         cur[i], true),
                                 cof_scale(lv[n][i], corr), true);
        for (unsigned i = k; i-- > 0;)
            cur[i] = cof_sum(c.jr.ring,
                             cof_sum(c.jr.ring, cof_scale(cof_shift(c.jr, lv[n][i]), bth),
                                     cur[i + 1], true),
                             cof_scale(lv[n][i], corr), true);
        lv[m] = std::move(cur);
    }
    return lv;
}

}  // namespace

bool CofactorCertificate::replay() const {
    if (cofactors.size() != generators.size()) return false;
    Poly acc(ring);
    for (std::size_t j = 0; j < cofactors.size(); ++j) acc += cofactors[j] * generators[j];
    return acc == target;
}

std::string CofactorCertificate::to_text() const {
    std::ostringstream os;
    os << name << ": " << (verified ? "verified" : "FAILED") << "\n";
    os << "  target: " << print_poly(target) << "\n";
    for (std::size_t j = 0; j < cofactors.size(); ++j) {
        if (cofactors[j].is_zero()) continue;
        os << "  generator " << j << ": " << print_poly(generators[j]) << "\n";
        os << "  cofactor " << j << ": " << print_poly(cofactors[j]) << "\n";
    }
    return os.str();
}

std::string ExpandedIdentity::to_text() const {
    std::ostringstream os;
    os << name << ": " << (holds ? "verified" : "FAILED") << "\n";
    os << "  expanded combination: " << print_poly(lhs) << "\n";
    os << "  closed form:          " << print_poly(rhs) << "\n";
    return os.str();
}

ExpandedIdentity verify_fraction_pair_identity(unsigned jet_order) {
    if (jet_order < 2) throw Error("fraction pair identity: jet order must be at least 2");
    JetRing jr = make_jet_ring({"t", "A1", "A2", "B1", "B2"}, jet_order);
    auto v = [&](std::size_t s, unsigned i) { return jr.at(s, i); };
    Poly t = v(0, 0), A1 = v(1, 0), A2 = v(2, 0), B1 = v(3, 0), B2 = v(4, 0);
    Poly tp = v(0, 1), A1p = v(1, 1), A2p = v(2, 1), B1p = v(3, 1), B2p = v(4, 1);

    Poly Theta = t * (A1 * B2 - B1 * A2);
    Poly Thetap = jet_shift(jr, Theta);

    ExpandedIdentity id;
    id.name = "fraction-pair bilinear identity";
    id.ring = jr.ring;
    id.lhs = t * B1 * B2 * Thetap - t * B1 * B2p * Theta - t * B1p * B2 * Theta -
             tp * B1 * B2 * Theta;
    id.rhs = t * t *
             (B2 * B2 * (A1p * B1 - A1 * B1p) - B1 * B1 * (A2p * B2 - A2 * B2p));
    id.holds = id.lhs == id.rhs;
    return id;
}

CrossNumeratorReport verify_patch_cross_numerators(unsigned level,
                                                   std::optional<unsigned> jet_order) {
    if (level < 1) throw Error("cross numerators: level must be at least 1");
    unsigned M = jet_order.value_or(level + 2);
    if (M < level + 1) throw Error("cross numerators: jet order must be at least level + 1");

    Ctx c = make_ctx(M);
    auto lv = build_levels(c, level);

    CrossNumeratorReport rep;
    rep.level = level;
    rep.jet_order = M;
    rep.all_verified = true;
    for (unsigned i = 0; i <= level; ++i) {
        std::string nm = "cross-numerator level=" + std::to_string(level) +
                         " i=" + std::to_string(i);
        auto cert = finish_certificate(std::move(nm), c.jr, c.theta,
                                       cross_term(c, level, i), lv[level][i]);
        rep.all_verified = rep.all_verified && cert.verified;
        rep.certificates.push_back(std::move(cert));
    }

    rep.recurrence_ok = true;
    for (unsigned n = 1; n < level; ++n) {
        Poly bth = c.b(0) * c.th(0);
        Poly corr = level_correction(c, n);
        for (unsigned i = 0; i <= n; ++i) {
            Poly lhs = bth * jet_shift(c.jr, cross_term(c, n, i));
            Poly rhs = cross_term(c, n + 1, i + 1) + cross_term(c, n + 1, i) +
                       corr * cross_term(c, n, i);
            if (lhs != rhs) rep.recurrence_ok = false;
        }
    }
    return rep;
}

AnnihilatorPowersReport verify_annihilator_powers(unsigned max_n,
                                                  std::optional<unsigned> jet_order) {
    unsigned M = jet_order.value_or(max_n + 1);
    if (M < max_n + 1) throw Error("annihilator powers: jet order must be at least n + 1");

    JetRing jr = make_jet_ring({"th", "f"}, M);
    auto th = [&](unsigned i) { return jr.at(0, i); };
    auto f = [&](unsigned i) { return jr.at(1, i); };
    std::vector<Poly> gens{th(0) * f(0)};

    AnnihilatorPowersReport rep;
    rep.max_n = max_n;
    rep.all_verified = true;

    Cof cur{Poly::constant(jr.ring, 1)};
    for (unsigned n = 0; n <= max_n; ++n) {
        Poly target = th(n) * f(0).pow(n + 1);
        auto cert = finish_certificate("annihilator-power n=" + std::to_string(n), jr, gens,
                                       target, cur);
        rep.all_verified = rep.all_verified && cert.verified;
        rep.certificates.push_back(std::move(cert));
        if (n < max_n)
            cur = cof_sum(jr.ring, cof_scale(cof_shift(jr, cur), f(0)),
                          cof_scale(cur, f(1).scaled(n + 1)), /*subtract=*/true);
    }
    return rep;
}

}  // namespace foliate
