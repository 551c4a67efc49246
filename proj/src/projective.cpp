#include "foliate/projective.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "foliate/error.hpp"

namespace foliate {

namespace {

std::string chart_var_name(unsigned k) { return "u" + std::to_string(k); }

/* Position of coordinate u_k inside chart i's variable list (k != i). */
std::size_t chart_pos(unsigned i, unsigned k) { return k < i ? k : k - 1; }

/* L_m(u) = sum_j A[m][j] u_j with u_i = 1, in chart i's ring. */
Poly linear_form(const RingPtr& ring, const std::vector<std::vector<mpq_class>>& a,
                 unsigned i, unsigned m) {
    Poly out(ring);
    for (unsigned j = 0; j < a.size(); ++j) {
        if (a[m][j] == 0) continue;
        Poly uj = (j == i) ? Poly::constant(ring, 1) : Poly::variable(ring, chart_pos(i, j));
        out += uj.scaled(a[m][j]);
    }
    return out;
}

/* d applied to u_k in chart i, with d(u_i) = 0 and u_i = 1 by convention. */
Poly chart_image(const AffineDiffScheme& chart, unsigned i, unsigned k) {
    return k == i ? Poly::zero(chart.ring) : chart.der.images[chart_pos(i, k)];
}

Poly chart_coordinate(const AffineDiffScheme& chart, unsigned i, unsigned k) {
    return k == i ? Poly::constant(chart.ring, 1) : Poly::variable(chart.ring, chart_pos(i, k));
}

/* The derivations of charts i and j describe one field iff for every k:
   u_j^2 * (d^j w_k)(u/u_j)  ==  d(u_k) u_j - u_k d(u_j)   in chart i,
   the quotient rule for w_k = u_k/u_j under the coordinate change. */
bool charts_compatible(const ProjectiveVectorField& V, unsigned i, unsigned j, unsigned k) {
    const auto& ci = V.charts[i];
    const auto& cj = V.charts[j];
    unsigned n1 = V.dim + 1;

    std::vector<Poly> num(V.dim);
    for (unsigned m = 0; m < n1; ++m)
        if (m != j) num[chart_pos(j, m)] = chart_coordinate(ci, i, m);
    Poly den = chart_coordinate(ci, i, j);

    Poly lhs = chart_image(cj, j, k).substitute_cleared(ci.ring, num, den, 2);
    Poly rhs = chart_image(ci, i, k) * den - chart_coordinate(ci, i, k) * chart_image(ci, i, j);
    return lhs == rhs;
}

std::vector<mpq_class> dense_coeffs(const Poly& f) {
    if (f.ring()->nvars() != 1) throw Error("univariate operation on a multivariate polynomial");
    std::vector<mpq_class> c(static_cast<std::size_t>(std::max(0L, f.degree())) + 1, mpq_class(0));
    for (const auto& [e, q] : f.terms()) c[e[0]] = q;
    return c;
}

Poly from_dense(const RingPtr& ring, const std::vector<mpq_class>& c) {
    Poly out(ring);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) out += Poly::monomial(ring, Expv{static_cast<unsigned>(i)}, c[i]);
    return out;
}

/* Divide by (t - r); returns the quotient and whether the remainder vanished. */
std::pair<std::vector<mpq_class>, bool> syndiv(const Ring& R, const std::vector<mpq_class>& c,
                                               const mpq_class& r) {
    std::size_t d = c.size() - 1;
    std::vector<mpq_class> q(d, mpq_class(0));
    if (d == 0) return {q, c[0] == 0};
    q[d - 1] = c[d];
    for (std::size_t k = d - 1; k >= 1; --k) q[k - 1] = R.add(c[k], R.mul(r, q[k]));
    mpq_class rem = R.add(c[0], R.mul(r, q[0]));
    return {std::move(q), rem == 0};
}

mpq_class horner(const Ring& R, const std::vector<mpq_class>& c, const mpq_class& r) {
    mpq_class acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = R.add(R.mul(acc, r), c[i]);
    return acc;
}

unsigned multiplicity_at(const Ring& R, std::vector<mpq_class> c, const mpq_class& r) {
    unsigned m = 0;
    while (c.size() > 1) {
        auto [q, exact] = syndiv(R, c, r);
        if (!exact) break;
        ++m;
        c = std::move(q);
    }
    return m;
}

/* All positive divisors, by trial-division factorization.  Guarded: inputs
   here are characteristic-polynomial coefficients of desk-scale matrices. */
std::vector<mpz_class> divisors_of(mpz_class x) {
    x = abs(x);
    if (x == 0) throw Error("divisor enumeration of zero");
    std::vector<std::pair<mpz_class, unsigned>> fac;
    auto strip = [&](const mpz_class& p) {
        unsigned e = 0;
        while (x % p == 0) { x /= p; ++e; }
        if (e) fac.emplace_back(p, e);
    };
    strip(2);
    mpz_class p = 3;
    const mpz_class cap = 1000000;
    while (p <= cap && p * p <= x) {
        strip(p);
        p += 2;
    }
    if (x > 1) {
        if (x >= cap * cap)
            throw Error("rational root search: coefficient too large to factor exactly");
        fac.emplace_back(x, 1);  // no factor below the cap and below cap^2: prime
    }
    std::vector<mpz_class> out{1};
    for (const auto& [q, e] : fac) {
        std::size_t base = out.size();
        mpz_class pw = 1;
        for (unsigned t = 1; t <= e; ++t) {
            pw *= q;
            for (std::size_t s = 0; s < base; ++s) out.push_back(out[s] * pw);
        }
        if (out.size() > 100000) throw Error("rational root search: too many divisor candidates");
    }
    return out;
}

}  // namespace

ProjectiveVectorField projective_field_from_matrix(unsigned char_p, unsigned dim,
                                                   std::vector<std::vector<mpq_class>> mat,
                                                   bool parallel) {
    if (dim < 1) throw Error("projective field: dimension must be at least 1");
    unsigned n1 = dim + 1;
    if (mat.size() != n1) throw Error("projective field: matrix must have side n+1");
    for (auto& row : mat)
        if (row.size() != n1) throw Error("projective field: matrix must be square");

    RingPtr scratch = make_ring(char_p, {"t"});  // validates char_p; normalizes entries
    for (auto& row : mat)
        for (auto& e : row) e = scratch->normalize(e);

    ProjectiveVectorField V;
    V.char_p = char_p;
    V.dim = dim;
    V.mat = std::move(mat);

    for (unsigned i = 0; i < n1; ++i) {
        std::vector<std::string> names;
        for (unsigned k = 0; k < n1; ++k)
            if (k != i) names.push_back(chart_var_name(k));
        RingPtr ring = make_ring(char_p, std::move(names));

        Poly li = linear_form(ring, V.mat, i, i);
        std::vector<Poly> images;
        for (unsigned k = 0; k < n1; ++k) {
            if (k == i) continue;
            images.push_back(linear_form(ring, V.mat, i, k) -
                             li * Poly::variable(ring, chart_pos(i, k)));
        }
        V.charts.push_back(make_affine(ring, {}, make_derivation(ring, std::move(images))));
    }

    if (dim <= 3) {
        struct Task { unsigned i, j, k; };
        std::vector<Task> tasks;
        for (unsigned i = 0; i < n1; ++i)
            for (unsigned j = 0; j < n1; ++j) {
                if (i == j) continue;
                for (unsigned k = 0; k < n1; ++k)
                    if (k != j) tasks.push_back({i, j, k});
            }
        bool ok = true;
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            if (!charts_compatible(V, tasks[t].i, tasks[t].j, tasks[t].k)) {
#pragma omp critical
                ok = false;
            }
        }
        if (!ok) throw Error("projective field: chart derivations disagree on an overlap");
    }
    return V;
}

Poly characteristic_polynomial(const ProjectiveVectorField& V) {
    RingPtr ring = make_ring(V.char_p, {"t"});
    unsigned n1 = V.dim + 1;
    std::vector<std::vector<Poly>> m(n1, std::vector<Poly>(n1, Poly(ring)));
    Poly t = Poly::variable(ring, 0);
    for (unsigned i = 0; i < n1; ++i)
        for (unsigned j = 0; j < n1; ++j) {
            m[i][j] = Poly::constant(ring, -V.mat[i][j]);
            if (i == j) m[i][j] += t;
        }

    std::vector<unsigned> cols(n1);
    for (unsigned j = 0; j < n1; ++j) cols[j] = j;
    std::function<Poly(unsigned, std::vector<unsigned>&)> det =
        [&](unsigned row, std::vector<unsigned>& cs) -> Poly {
        if (cs.size() == 1) return m[row][cs[0]];
        Poly acc(ring);
        for (std::size_t pos = 0; pos < cs.size(); ++pos) {
            if (m[row][cs[pos]].is_zero()) continue;
            std::vector<unsigned> rest;
            rest.reserve(cs.size() - 1);
            for (std::size_t s = 0; s < cs.size(); ++s)
                if (s != pos) rest.push_back(cs[s]);
            Poly sub = det(row + 1, rest);
            Poly term = m[row][cs[pos]] * sub;
            acc += (pos % 2 == 0) ? term : -term;
        }
        return acc;
    };
    return det(0, cols);
}

std::vector<std::pair<mpq_class, unsigned>> field_roots(const Poly& f) {
    if (f.is_zero()) throw Error("root search on the zero polynomial");
    const Ring& R = *f.ring();
    std::vector<mpq_class> c = dense_coeffs(f);
    std::vector<std::pair<mpq_class, unsigned>> roots;

    if (R.char_p > 0) {
        for (unsigned r = 0; r < R.char_p; ++r) {
            mpq_class rv(r);
            if (horner(R, c, rv) == 0) roots.emplace_back(rv, multiplicity_at(R, c, rv));
        }
        return roots;
    }

    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0, static_cast<unsigned>(low));
    if (low + 1 == c.size()) return roots;  // c * t^low: only the root 0

    mpz_class den_lcm = 1;
    for (std::size_t i = low; i < c.size(); ++i)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c[i].get_den().get_mpz_t());
    std::vector<mpz_class> ic;
    for (std::size_t i = low; i < c.size(); ++i) ic.push_back(mpz_class(c[i] * den_lcm));
    mpz_class content = 0;
    for (const auto& v : ic) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    for (auto& v : ic) v /= content;

    std::set<mpq_class> cands;
    for (const auto& p : divisors_of(ic.front()))
        for (const auto& q : divisors_of(ic.back())) {
            mpq_class r(p, q);
            r.canonicalize();
            cands.insert(r);
            cands.insert(-r);
        }
    for (const auto& r : cands)
        if (horner(R, c, r) == 0) roots.emplace_back(r, multiplicity_at(R, c, r));
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

Poly deflate_roots(const Poly& f, const std::vector<std::pair<mpq_class, unsigned>>& roots) {
    const Ring& R = *f.ring();
    std::vector<mpq_class> c = dense_coeffs(f);
    for (const auto& [r, mult] : roots)
        for (unsigned s = 0; s < mult; ++s) {
            auto [q, exact] = syndiv(R, c, r);
            if (!exact) throw Error("deflation by a non-root");
            c = std::move(q);
        }
    return from_dense(f.ring(), c);
}

LeafSearchReport projective_rational_leaves(const ProjectiveVectorField& V, bool parallel) {
    LeafSearchReport rep;
    rep.char_poly = characteristic_polynomial(V);
    rep.eigenvalues = field_roots(rep.char_poly);

    Poly rem = deflate_roots(rep.char_poly, rep.eigenvalues);
    long rd = rem.degree();
    if (rd >= 2) {
        ExtensionReport ext;
        ext.rootless = rem;
        ext.degree = static_cast<unsigned>(rd);
        ext.irreducible = rd <= 3;
        rep.extension = std::move(ext);
    }

    const RingPtr& field = rep.char_poly.ring();
    const Ring& R = *field;
    unsigned n1 = V.dim + 1;
    for (const auto& [lambda, mult] : rep.eigenvalues) {
        Matrix m(field, n1, n1);
        for (unsigned i = 0; i < n1; ++i)
            for (unsigned j = 0; j < n1; ++j)
                m.at(i, j) = R.sub(V.mat[i][j], i == j ? lambda : mpq_class(0));
        for (auto& v : kernel_basis(m, parallel)) {
            unsigned pivot = 0;
            while (pivot < n1 && v[pivot] == 0) ++pivot;
            if (pivot == n1) continue;  // cannot happen: kernel vectors are nonzero
            mpq_class scale = R.inv(v[pivot]);
            ProjectiveLeaf leaf;
            leaf.eigenvalue = lambda;
            leaf.chart = pivot;
            for (auto& x : v) leaf.point.push_back(R.mul(x, scale));

            const auto& chart = V.charts[pivot];
            std::vector<Poly> gens;
            for (unsigned k = 0; k < n1; ++k) {
                if (k == pivot) continue;
                gens.push_back(Poly::variable(chart.ring, chart_pos(pivot, k)) -
                               Poly::constant(chart.ring, leaf.point[k]));
            }
            leaf.verified = is_leaf(chart, Ideal(chart.ring, std::move(gens)));
            rep.leaves.push_back(std::move(leaf));
        }
    }
    return rep;
}

}  // namespace foliate
