#include <random>
#include <vector>

#include "doctest.h"
#include "foliate/format.hpp"
#include "foliate/groebner.hpp"
#include "foliate/order.hpp"
#include "foliate/poly.hpp"
#include "foliate/ring.hpp"

using namespace foliate;

TEST_CASE("buchberger: textbook bases, serial == parallel, reduced and monic") {
    RingPtr R = make_ring(0, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);

    std::vector<std::vector<Poly>> inputs = {
        {x.pow(2) + y.pow(2), x * y},
        {x.pow(3) - y.scaled(2), x.pow(2) * y - y.pow(2) + x},
        {x * y - Poly::constant(R, 1), x.pow(2) + y.pow(2) - Poly::constant(R, 4)},
        {x - y, x + y},
    };
    for (const auto& gens : inputs) {
        auto gb_s = buchberger(R, gens, {}, {{}, false});
        auto gb_p = buchberger(R, gens, {}, {{}, true});
        CHECK(gb_s == gb_p);
        MonomialOrder ord;
        for (const auto& g : gb_s) {
            CHECK(leading_term(g, ord).second == 1);  // monic
            // reduced: no term of g is divisible by another leading monomial
            for (const auto& h : gb_s) {
                if (&g == &h) continue;
                Expv lh = leading_term(h, ord).first;
                for (const auto& t : ordered_terms(g, ord)) {
                    bool divides = true;
                    for (std::size_t v = 0; v < lh.size(); ++v)
                        if (t.first[v] < lh[v]) divides = false;
                    CHECK_FALSE(divides);
                }
            }
        }
        // every original generator reduces to zero
        for (const auto& g : gens) CHECK(normal_form(g, gb_s).is_zero());
    }

    CHECK(buchberger(R, {x - y, x + y}).size() == 2);  // <x, y>
    CHECK(buchberger(R, {}).empty());
    CHECK(buchberger(R, {Poly::zero(R)}).empty());
}

TEST_CASE("normal form is zero exactly on constructed members") {
    RingPtr R = make_ring(0, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    std::vector<Poly> gens = {x.pow(2) - y, x * y - Poly::constant(R, 1)};
    auto gb = buchberger(R, gens);

    std::mt19937 rng(314);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < 20; ++t) {
        Poly member = Poly::zero(R);
        for (const auto& g : gens) {
            Poly cof = x.scaled(coef(rng)) + y.scaled(coef(rng)) + Poly::constant(R, coef(rng));
            member += cof * g;
        }
        CHECK(normal_form(member, gb).is_zero());
        CHECK_FALSE(normal_form(member + Poly::constant(R, 1), gb).is_zero());
    }
}

TEST_CASE("tracked basis and tracked normal form replay exactly") {
    RingPtr R = make_ring(0, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    std::vector<Poly> gens = {x.pow(2) + y.pow(2) - Poly::constant(R, 1), x - y.pow(2)};
    TrackedBasis tb = buchberger_tracked(R, gens);
    REQUIRE(tb.basis.size() == tb.cof.size());
    for (std::size_t k = 0; k < tb.basis.size(); ++k) {
        Poly sum = Poly::zero(R);
        for (std::size_t t = 0; t < gens.size(); ++t) sum += tb.cof[k][t] * gens[t];
        CHECK(sum == tb.basis[k]);
    }

    Poly f = (x + y) * gens[0] + y.pow(2) * gens[1];
    TrackedNF nf = normal_form_tracked(f, tb);
    CHECK(nf.remainder.is_zero());
    Poly sum = nf.remainder;
    for (std::size_t t = 0; t < gens.size(); ++t) sum += nf.cof[t] * gens[t];
    CHECK(sum == f);

    Poly g = f + x.pow(3) + Poly::constant(R, 2);
    TrackedNF nf2 = normal_form_tracked(g, tb);
    Poly sum2 = nf2.remainder;
    for (std::size_t t = 0; t < gens.size(); ++t) sum2 += nf2.cof[t] * gens[t];
    CHECK(sum2 == g);
}

TEST_CASE("ideal membership, containment, equality") {
    RingPtr R = make_ring(0, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    Ideal I(R, {x.pow(2) - y});
    CHECK(ideal_member((x.pow(2) - y) * (x + y.scaled(3)), I));
    CHECK_FALSE(ideal_member(x, I));
    CHECK(ideal_member(Poly::zero(R), I));

    Ideal J(R, {x.pow(2) - y, y.pow(2)});
    CHECK(ideal_contains(J, I));
    CHECK_FALSE(ideal_contains(I, J));
    CHECK(ideal_equal(Ideal(R, {x, y}), Ideal(R, {x + y, x - y})));
    CHECK_FALSE(ideal_equal(I, J));
    CHECK(Ideal(R, {}).is_zero());
    CHECK(Ideal(R, {Poly::constant(R, 2)}).is_unit());
}

TEST_CASE("sum, product, intersection on monomial ideals") {
    RingPtr R = make_ring(0, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    Ideal Ix(R, {x}), Iy(R, {y});
    CHECK(ideal_equal(ideal_sum(Ix, Iy), Ideal(R, {x, y})));
    CHECK(ideal_equal(ideal_product(Ix, Iy), Ideal(R, {x * y})));
    CHECK(ideal_equal(ideal_intersect(Ix, Iy), Ideal(R, {x * y})));

    Ideal A(R, {x.pow(2), x * y});
    CHECK(ideal_equal(ideal_intersect(A, Iy), Ideal(R, {x.pow(2) * y, x * y})));
    CHECK(ideal_equal(ideal_intersect(A, Ix), A));
}

TEST_CASE("elimination and saturation") {
    RingPtr R = make_ring(0, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);

    // circle meets the diagonal: eliminating x leaves 2y^2 - 1 (up to scaling)
    Ideal I(R, {x.pow(2) + y.pow(2) - Poly::constant(R, 1), x - y});
    Ideal E = elimination_ideal(I, {0});
    REQUIRE(E.ring()->nvars() == 1);
    Poly t = Poly::variable(E.ring(), 0);
    CHECK(ideal_equal(E, Ideal(E.ring(), {t.pow(2) - Poly::constant(E.ring(), mpq_class(1, 2))})));

    CHECK(ideal_equal(saturation(Ideal(R, {x.pow(2) * y}), y), Ideal(R, {x.pow(2)})));
    CHECK(ideal_equal(saturation(Ideal(R, {x * y}), x), Ideal(R, {y})));
    // y^2 is already inside, so 1 * y^2 lands in the ideal: unit saturation
    CHECK(saturation(Ideal(R, {x * y, y.pow(2)}), y).is_unit());
    CHECK(ideal_equal(saturation(Ideal(R, {x}), y), Ideal(R, {x})));
}

TEST_CASE("radical membership") {
    RingPtr R = make_ring(0, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    Ideal I(R, {x.pow(3), y.pow(2)});
    CHECK(radical_member(x, I));
    CHECK(radical_member(y, I));
    CHECK(radical_member(x * y + x.pow(2), I));
    CHECK_FALSE(radical_member(x + Poly::constant(R, 1), I));
    CHECK(ideal_equal_radical(I, Ideal(R, {x, y})));
    CHECK_FALSE(ideal_equal_radical(I, Ideal(R, {x})));
    CHECK(ideal_equal_radical(Ideal(R, {x.pow(2) * y.pow(4)}), Ideal(R, {x * y})));
}

TEST_CASE("degree cap keeps low-degree membership on homogeneous input") {
    RingPtr R = make_ring(0, {"x", "y", "z"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1), z = Poly::variable(R, 2);
    std::vector<Poly> gens = {x * y - z.pow(2), x.pow(2) - y * z};
    auto full = buchberger(R, gens);
    GOpts capped;
    capped.degree_cap = 4;
    auto truncated = buchberger(R, gens, {}, capped);
    // members of degree <= 4 reduce to zero against the truncated basis
    Poly member = (x + y) * gens[0] + z * gens[1];
    CHECK(member.degree() <= 4);
    CHECK(normal_form(member, truncated).is_zero());
    CHECK(normal_form(member, full).is_zero());
}

TEST_CASE("fresh_var_name avoids collisions") {
    RingPtr R = make_ring(0, {"t", "t0"});
    std::string n = fresh_var_name(*R, "t");
    CHECK(n != "t");
    CHECK(n != "t0");
}

TEST_CASE("groebner over a prime field") {
    RingPtr R = make_ring(5, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    auto gb = buchberger(R, {x.pow(2) + y.scaled(3), x * y.scaled(2) - Poly::constant(R, 1)});
    for (const auto& g : gb) CHECK(leading_term(g, {}).second == 1);
    CHECK(ideal_member((x.pow(2) + y.scaled(3)) * x, Ideal(R, gb)));
}
