#pragma once
/* Differential ideals under a fixed derivation: the closure construction
 * (smallest differential ideal containing a given one) and the descent
 * computation of the largest differential ideal inside a given prime.
 *
 * Descent maintains J_0 = p and
 *     J_{k+1} = < f in J_k : deg f <= D, d(f) in J_k >,
 * where the degree-<= D slice of J_k is spanned by the monomial multiples
 * m*g of its Groebner basis with deg(m*g) <= D (complete because degrevlex
 * is degree-compatible), and "d(f) in J_k" is an exact linear condition on
 * the span coefficients.  At a fixed point the result is differential; it
 * equals the true maximal differential subideal whenever that ideal is
 * generated in degree <= D, which is the hypothesis attached to an Exact
 * verdict.
 */

#include <optional>

#include "foliate/derivation.hpp"
#include "foliate/groebner.hpp"

namespace foliate {

/* d(g) in I for every Groebner basis element g (equivalently, for every
   generator; the Leibniz rule extends it to the whole ideal). */
bool is_differential_ideal(const Ideal& I, const Derivation& d);
bool is_differential_ideal_hs(const Ideal& I, const HigherDerivation& hs);

struct ClosureResult {
    Ideal closure;
    unsigned rounds = 0;
    bool stabilized = false;
};

/* Smallest differential ideal containing I: adjoin derivatives of the
   current generators until stable.  Stabilizes for any ideal in a
   polynomial ring (ascending chain); max_rounds is a safety valve. */
ClosureResult diff_closure(const Ideal& I, const Derivation& d, unsigned max_rounds = 64);

enum class TrajStatus { Exact, BoundedApprox };

struct TrajectoryResult {
    Ideal ideal;
    TrajStatus status = TrajStatus::BoundedApprox;
    unsigned deg_bound = 0;
    unsigned rounds_used = 0;
    bool fixed_point = false;
    bool differential = false;
};

inline unsigned default_traj_degree(const Ideal& p) {
    long d = 0;
    for (const auto& g : p.gens()) d = std::max(d, g.degree());
    return std::max(3L, d + 2);
}

TrajectoryResult trajectory(const Ideal& p, const Derivation& d,
                            std::optional<unsigned> deg = std::nullopt,
                            unsigned rounds = 32, bool parallel = true);

/* Same descent with the conditions D_i(f) in J_k for every 1 <= i <= M. */
TrajectoryResult hs_trajectory(const Ideal& p, const HigherDerivation& hs,
                               std::optional<unsigned> deg = std::nullopt,
                               unsigned rounds = 32, bool parallel = true);

/* Ring morphism src -> dst given by variable images. */
struct RingMap {
    RingPtr src, dst;
    std::vector<Poly> images;  // in dst, one per src variable
};

RingMap make_ring_map(RingPtr src, RingPtr dst, std::vector<Poly> images);

Poly apply_map(const RingMap& phi, const Poly& f);

/* phi respects the derivations: phi(d_src x) = d_dst(phi x) for all x. */
bool map_is_differential(const RingMap& phi, const Derivation& dsrc,
                         const Derivation& ddst);

/* phi^{-1}(Q) by eliminating the dst variables from Q + <x_v - phi(x_v)>. */
Ideal preimage(const RingMap& phi, const Ideal& Q);

enum class Tri { True, False, Inconclusive };

struct FunctorialityReport {
    Tri verdict = Tri::Inconclusive;
    TrajectoryResult traj_dst;       // trajectory of Q under d_dst
    TrajectoryResult traj_src;       // trajectory of phi^{-1}(Q) under d_src
    bool both_exact = false;
};

/* Compare phi^{-1}(trajectory Q) with trajectory(phi^{-1} Q); conclusive
   only when both descents certify Exact. */
FunctorialityReport functoriality_check(const RingMap& phi, const Derivation& dsrc,
                                        const Derivation& ddst, const Ideal& Q,
                                        std::optional<unsigned> deg = std::nullopt,
                                        unsigned rounds = 32);

}  // namespace foliate
