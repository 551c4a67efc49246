#include "foliate/jetring.hpp"

#include "foliate/error.hpp"

namespace foliate {

Poly JetRing::at(std::size_t sym, unsigned ord) const {
    if (sym >= symbols.size()) throw Error("jet ring: symbol index out of range");
    if (ord > order) throw Error("jet ring: derivative order exceeds the truncation");
    return Poly::variable(ring, var_index(sym, ord));
}

JetRing make_jet_ring(std::vector<std::string> symbols, unsigned order, unsigned char_p) {
    if (symbols.empty()) throw Error("jet ring: no symbols");
    std::vector<std::string> names;
    names.reserve(symbols.size() * (order + 1));
    for (const auto& s : symbols)
        for (unsigned i = 0; i <= order; ++i) names.push_back(s + "_" + std::to_string(i));
    JetRing jr;
    jr.ring = make_ring(char_p, std::move(names));
    jr.symbols = std::move(symbols);
    jr.order = order;
    return jr;
}

Poly jet_shift(const JetRing& jr, const Poly& f) {
    Poly out(jr.ring);
    for (std::size_t s = 0; s < jr.nsym(); ++s)
        for (unsigned i = 0; i <= jr.order; ++i) {
            Poly p = f.partial(jr.var_index(s, i));
            if (p.is_zero()) continue;
            if (i == jr.order)
                throw Error("jet shift: \"" + jr.ring->vars[jr.var_index(s, i)] +
                            "\" is at the truncation order");
            out += p * jr.at(s, i + 1);
        }
    return out;
}

Poly jet_shift_iter(const JetRing& jr, const Poly& f, unsigned n) {
    Poly out = f;
    for (unsigned k = 0; k < n; ++k) out = jet_shift(jr, out);
    return out;
}

}  // namespace foliate
