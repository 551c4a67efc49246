#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "foliate/derivation.hpp"
#include "foliate/diffideal.hpp"
#include "foliate/groebner.hpp"
#include "foliate/poly.hpp"
#include "foliate/ring.hpp"
#include "oracles.hpp"

using namespace foliate;

TEST_CASE("is_differential_ideal on the planar conserved quantity") {
    RingPtr R = make_ring(0, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    Derivation d = make_derivation(R, {y.scaled(-2), x.pow(2).scaled(3)});
    Poly H = x.pow(3) + y.pow(2);
    CHECK(is_differential_ideal(Ideal(R, {H - Poly::constant(R, 1)}), d));
    CHECK(is_differential_ideal(Ideal(R, {H}), d));
    CHECK_FALSE(is_differential_ideal(Ideal(R, {x}), d));
    CHECK(is_differential_ideal(Ideal(R, {}), d));
    CHECK(is_differential_ideal(Ideal(R, {Poly::constant(R, 1)}), d));
}

TEST_CASE("diff_closure adjoins derivatives until stable") {
    RingPtr R = make_ring(0, {"x"});
    Poly x = Poly::variable(R, 0);

    // translation flow: the only invariant closed subsets are trivial
    Derivation shift = make_derivation(R, {Poly::constant(R, 1)});
    ClosureResult r = diff_closure(Ideal(R, {x}), shift);
    CHECK(r.stabilized);
    CHECK(r.closure.is_unit());

    // radial flow fixes the origin
    Derivation radial = make_derivation(R, {x});
    r = diff_closure(Ideal(R, {x}), radial);
    CHECK(r.stabilized);
    CHECK(ideal_equal(r.closure, Ideal(R, {x})));
    CHECK(is_differential_ideal(r.closure, radial));

    r = diff_closure(Ideal(R, {x - Poly::constant(R, 2)}), radial);
    CHECK(r.closure.is_unit());  // the orbit of x = 2 is dense; adjoining d(x-2) = x forces 1

    // closure is idempotent and contains the start
    RingPtr R2 = make_ring(0, {"x", "y"});
    Poly x2 = Poly::variable(R2, 0), y2 = Poly::variable(R2, 1);
    Derivation d2 = make_derivation(R2, {y2, x2});
    Ideal I(R2, {x2.pow(2) - y2});
    ClosureResult c1 = diff_closure(I, d2);
    CHECK(c1.stabilized);
    CHECK(ideal_contains(c1.closure, I));
    CHECK(is_differential_ideal(c1.closure, d2));
    ClosureResult c2 = diff_closure(c1.closure, d2);
    CHECK(ideal_equal(c1.closure, c2.closure));
    CHECK(c2.rounds <= 1);
}

TEST_CASE("trajectory on the affine line") {
    RingPtr R = make_ring(0, {"x"});
    Poly x = Poly::variable(R, 0);
    Derivation shift = make_derivation(R, {Poly::constant(R, 1)});
    Derivation radial = make_derivation(R, {x});

    for (int c : {0, 1, -2}) {
        TrajectoryResult t = trajectory(Ideal(R, {x - Poly::constant(R, c)}), shift);
        CHECK(t.status == TrajStatus::Exact);
        CHECK(t.ideal.is_zero());
        CHECK(t.fixed_point);
        CHECK(t.differential);
    }

    TrajectoryResult t0 = trajectory(Ideal(R, {x}), radial);
    CHECK(t0.status == TrajStatus::Exact);
    CHECK(ideal_equal(t0.ideal, Ideal(R, {x})));
    for (int c : {1, 3}) {
        TrajectoryResult t = trajectory(Ideal(R, {x - Poly::constant(R, c)}), radial);
        CHECK(t.status == TrajStatus::Exact);
        CHECK(t.ideal.is_zero());
    }
}

TEST_CASE("trajectory respects explicit degree bounds and rounds") {
    RingPtr R = make_ring(0, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    Derivation d = make_derivation(R, {y.scaled(-2), x.pow(2).scaled(3)});
    Ideal p(R, {x - Poly::constant(R, 1), y});
    CHECK(default_traj_degree(p) == 3);

    TrajectoryResult t = trajectory(p, d);
    CHECK(t.status == TrajStatus::Exact);
    CHECK(t.deg_bound == 3);
    Poly H = x.pow(3) + y.pow(2) - Poly::constant(R, 1);
    CHECK(ideal_equal(t.ideal, Ideal(R, {H})));
    CHECK(is_differential_ideal(t.ideal, d));

    // a degree bound too small to see the conserved quantity still yields a
    // differential ideal, just a smaller one
    TrajectoryResult low = trajectory(p, d, 2);
    CHECK(low.deg_bound == 2);
    CHECK(is_differential_ideal(low.ideal, d));
    CHECK(ideal_contains(t.ideal, low.ideal));

    // rounds = 0 cannot even start the descent
    TrajectoryResult none = trajectory(p, d, std::nullopt, 0);
    CHECK(none.status == TrajStatus::BoundedApprox);
}

TEST_CASE("trajectory agrees with the brute-force oracle on fixed instances") {
    RingPtr R = make_ring(0, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);

    struct Inst {
        Poly ix, iy;
        mpq_class a, b;
    };
    std::vector<Inst> instances = {
        {y.scaled(-2), x.pow(2).scaled(3), 1, 0},          // on the cubic level set
        {y.scaled(-2), x.pow(2).scaled(3), 1, 1},          // generic point
        {x, y, 0, 0},                                      // radial fixed point
        {x, y.scaled(2), 3, 0},                            // axis point, weighted radial
        {Poly::constant(R, 1), Poly::zero(R), 2, 5},       // translation
    };
    for (const auto& in : instances) {
        Derivation d = make_derivation(R, {in.ix, in.iy});
        Ideal p(R, {x - Poly::constant(R, in.a), y - Poly::constant(R, in.b)});
        TrajectoryResult t = trajectory(p, d);
        REQUIRE(t.status == TrajStatus::Exact);

        // oracle span over the same degree window
        auto to_p2 = [&](const Poly& f) {
            oracle::P2 out;
            for (const auto& [e, c] : ordered_terms(f, {}))
                oracle::p2_set(out, static_cast<int>(e[0]), static_cast<int>(e[1]), c);
            return out;
        };
        int D = static_cast<int>(t.deg_bound);
        auto span = oracle::trajectory_span(to_p2(in.ix), to_p2(in.iy), in.a, in.b, D);
        auto mons = oracle::p2_monomials(D);
        std::vector<Poly> oracle_gens;
        for (const auto& v : span) {
            Poly f = Poly::zero(R);
            for (std::size_t c = 0; c < mons.size(); ++c) {
                if (v[c] == 0) continue;
                Expv e = {static_cast<unsigned>(mons[c].first),
                          static_cast<unsigned>(mons[c].second)};
                f += Poly::monomial(R, e, v[c]);
            }
            oracle_gens.push_back(f);
        }
        CHECK(ideal_equal(t.ideal, Ideal(R, oracle_gens)));
    }
}

TEST_CASE("hs_trajectory over prime fields returns fully invariant ideals") {
    RingPtr R = make_ring(5, {"x"});
    Poly x = Poly::variable(R, 0);
    Poly one = Poly::constant(R, 1), zero = Poly::zero(R);
    // additive flow x -> x + t as a Hasse-Schmidt family
    HigherDerivation hs = make_higher_derivation(R, 3, {{one}, {zero}, {zero}});
    TrajectoryResult t = hs_trajectory(Ideal(R, {x - Poly::constant(R, 2)}), hs);
    CHECK(t.status == TrajStatus::Exact);
    CHECK(t.ideal.is_zero());
    CHECK(is_differential_ideal_hs(t.ideal, hs));

    // multiplicative flow x -> x exp(t) in divided powers: D_i(x) = x / i!
    HigherDerivation mult = make_higher_derivation(R, 3, {{x}, {x.scaled(3)}, {x}});
    CHECK(hs_check_iterativity(mult));
    TrajectoryResult t2 = hs_trajectory(Ideal(R, {x}), mult);
    CHECK(t2.status == TrajStatus::Exact);
    CHECK(ideal_equal(t2.ideal, Ideal(R, {x})));
    CHECK(is_differential_ideal_hs(t2.ideal, mult));
}

TEST_CASE("ring maps: application, differentiality, preimage") {
    RingPtr S = make_ring(0, {"u"});
    RingPtr T = make_ring(0, {"x"});
    Poly u = Poly::variable(S, 0), x = Poly::variable(T, 0);

    RingMap phi = make_ring_map(S, T, {x + Poly::constant(T, 1)});
    CHECK(apply_map(phi, u.pow(2)) == (x + Poly::constant(T, 1)).pow(2));

    Derivation ds = make_derivation(S, {Poly::constant(S, 1)});
    Derivation dt = make_derivation(T, {Poly::constant(T, 1)});
    CHECK(map_is_differential(phi, ds, dt));

    RingMap sq = make_ring_map(S, T, {x.pow(2)});
    CHECK_FALSE(map_is_differential(sq, ds, dt));

    Ideal Q(T, {x - Poly::constant(T, 2)});
    Ideal pre = preimage(phi, Q);
    CHECK(ideal_equal(pre, Ideal(S, {u - Poly::constant(S, 3)})));  // u = x + 1 = 3
}

TEST_CASE("functoriality on a translation conjugacy") {
    RingPtr S = make_ring(0, {"u"});
    RingPtr T = make_ring(0, {"x"});
    Poly u = Poly::variable(S, 0), x = Poly::variable(T, 0);
    RingMap phi = make_ring_map(S, T, {x + Poly::constant(T, 1)});
    Derivation ds = make_derivation(S, {Poly::constant(S, 1)});
    Derivation dt = make_derivation(T, {Poly::constant(T, 1)});

    FunctorialityReport rep = functoriality_check(phi, ds, dt, Ideal(T, {x - Poly::constant(T, 2)}));
    CHECK(rep.both_exact);
    CHECK(rep.verdict == Tri::True);
}
